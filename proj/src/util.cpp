#include "trib/util.hpp"

#include <stdexcept>

#include "trib/scalar.hpp"

namespace trib {

exact_int pow_int(const exact_int& base, unsigned long e) {
    exact_int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

exact_rat pow_rat(const exact_rat& base, long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw std::domain_error("pow_rat: 0 to a negative power");
    exact_rat out;
    const auto mag = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), mag);
    if (e < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    out.canonicalize();
    return out;
}

std::string to_string(const exact_int& v) { return v.get_str(); }

std::string to_string(const exact_rat& v) { return v.get_str(); }

exact_int parse_int(const std::string& s) {
    exact_int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return v;
}

exact_rat parse_rat(const std::string& s) {
    exact_rat v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
}

std::uint64_t rng64::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long rng64::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

std::vector<sequence_spec> random_specs(size_t n, rng64& rng) {
    std::vector<sequence_spec> specs;
    specs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        long a = rng.uniform(-999, 999);
        long b = rng.uniform(-999, 999);
        long c = rng.uniform(-999, 999);
        specs.push_back({exact_int(a), exact_int(b), exact_int(c)});
    }
    return specs;
}

sequence_spec parse_spec(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("seed must be three comma-separated integers: '" + s +
                                    "'");
    return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

index_range parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must be 'lo..hi': '" + s + "'");
    const std::string lo_s = s.substr(0, pos);
    const std::string hi_s = s.substr(pos + 2);
    long lo, hi;
    try {
        size_t used = 0;
        lo = std::stol(lo_s, &used);
        if (used != lo_s.size()) throw std::invalid_argument(lo_s);
        hi = std::stol(hi_s, &used);
        if (used != hi_s.size()) throw std::invalid_argument(hi_s);
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be 'lo..hi': '" + s + "'");
    }
    if (lo > hi) throw std::invalid_argument("empty range: '" + s + "'");
    return {lo, hi};
}

}  // namespace trib
