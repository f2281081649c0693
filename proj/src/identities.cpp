#include "trib/identities.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "trib/util.hpp"

namespace trib {

void validate(const identity_template& t) {
    if (t.terms.empty() && t.cross_terms.empty())
        throw std::invalid_argument("identity template '" + t.id + "' is empty");
    if (t.power == 0)
        throw std::invalid_argument("identity template '" + t.id + "' has power 0");
    std::set<long> offsets;
    for (const auto& term : t.terms)
        if (!offsets.insert(term.offset).second)
            throw std::invalid_argument("identity template '" + t.id +
                                        "' repeats offset " + std::to_string(term.offset));
    std::set<std::pair<long, long>> pairs;
    for (const auto& cross : t.cross_terms) {
        auto key = std::minmax(cross.a, cross.b);
        if (!pairs.insert(key).second)
            throw std::invalid_argument("identity template '" + t.id +
                                        "' repeats cross offsets");
    }
}

namespace {

identity_template squares(std::string id, long first_offset,
                          std::vector<long> coeffs) {
    identity_template t;
    t.id = std::move(id);
    t.power = 2;
    long offset = first_offset;
    for (long c : coeffs) {
        if (c != 0) t.terms.push_back({offset, exact_int(c)});
        ++offset;
    }
    return t;
}

std::vector<identity_template> make_builtins() {
    std::vector<identity_template> out;

    // T_r^2 - 2T_{r-1}^2 - 3T_{r-2}^2 - 6T_{r-3}^2 + T_{r-4}^2 + T_{r-6}^2 = 0
    out.push_back(squares("S1", 0, {1, -2, -3, -6, 1, 0, 1}));
    // T_{r+2}^2 - 4T_{r+1}^2 + T_r^2 + 14T_{r-2}^2 - 4T_{r-3}^2 - 2T_{r-4}^2
    //   - 8T_{r-5}^2 + T_{r-6}^2 + T_{r-8}^2 = 0
    out.push_back(squares("S2", -2, {1, -4, 1, 0, 14, -4, -2, -8, 1, 0, 1}));
    // T_{r+3}^2 - 3T_{r+2}^2 - 4T_r^2 + 2T_{r-1}^2 - 10T_{r-2}^2 - 4T_{r-3}^2
    //   + T_{r-5}^2 + T_{r-6}^2 = 0
    out.push_back(squares("S3", -3, {1, -3, 0, -4, 2, -10, -4, 0, 1, 1}));
    // T_{r+1}^2 - 4T_r^2 + 2T_{r-2}^2 + 16T_{r-3}^2 + 4T_{r-4}^2 - 2T_{r-6}^2
    //   - T_{r-7}^2 = 0
    out.push_back(squares("S4", -1, {1, -4, 0, 2, 16, 4, 0, -2, -1}));
    // T_{r+2}^2 - 2T_{r+1}^2 - 2T_r^2 - 8T_{r-1}^2 - 2T_{r-2}^2 - 6T_{r-3}^2
    //   + 2T_{r-4}^2 + T_{r-6}^2 = 0
    out.push_back(squares("S5", -2, {1, -2, -2, -8, -2, -6, 2, 0, 1}));

    // 4T_{r-1}T_r = 4T_{r-1}^2 - T_{r-4}^2 + T_r^2
    {
        identity_template t;
        t.id = "P1";
        t.power = 2;
        t.cross_terms.push_back({1, 0, 4});
        t.terms = {{1, -4}, {4, 1}, {0, -1}};
        out.push_back(std::move(t));
    }
    // 4T_{r-1}T_{r-4} = 4T_{r-1}^2 + T_{r-4}^2 - T_r^2
    {
        identity_template t;
        t.id = "P2";
        t.power = 2;
        t.cross_terms.push_back({1, 4, 4});
        t.terms = {{1, -4}, {4, -1}, {0, 1}};
        out.push_back(std::move(t));
    }
    // 2T_rT_{r-4} = 4T_{r-1}^2 - T_{r-4}^2 - T_r^2
    {
        identity_template t;
        t.id = "P3";
        t.power = 2;
        t.cross_terms.push_back({0, 4, 2});
        t.terms = {{1, -4}, {4, 1}, {0, 1}};
        out.push_back(std::move(t));
    }
    // 8T_{r-1}T_{r-3} = 4T_r^2 + 2T_{r-3}^2 - T_{r+1}^2 + 4T_{r-4}^2 - T_{r-7}^2
    {
        identity_template t;
        t.id = "P4";
        t.power = 2;
        t.cross_terms.push_back({1, 3, 8});
        t.terms = {{0, -4}, {3, -2}, {-1, 1}, {4, -4}, {7, 1}};
        out.push_back(std::move(t));
    }

    // T_r^3 - 4T_{r-1}^3 - 9T_{r-2}^3 - 34T_{r-3}^3 + 24T_{r-4}^3 - 2T_{r-5}^3
    //   + 40T_{r-6}^3 - 14T_{r-7}^3 - T_{r-8}^3 - 2T_{r-9}^3 + T_{r-10}^3 = 0
    {
        identity_template t;
        t.id = "C1";
        t.power = 3;
        long offset = 0;
        for (long c : {1, -4, -9, -34, 24, -2, 40, -14, -1, -2, 1})
            t.terms.push_back({offset++, exact_int(c)});
        out.push_back(std::move(t));
    }

    for (const auto& t : out) validate(t);
    return out;
}

// Window bounds over all offsets the template touches.
std::pair<long, long> offset_bounds(const identity_template& t) {
    long min_off = std::numeric_limits<long>::max();
    long max_off = std::numeric_limits<long>::min();
    auto see = [&](long o) {
        min_off = std::min(min_off, o);
        max_off = std::max(max_off, o);
    };
    for (const auto& term : t.terms) see(term.offset);
    for (const auto& cross : t.cross_terms) {
        see(cross.a);
        see(cross.b);
    }
    return {min_off, max_off};
}

// Residual against a contiguous window of terms; window[i] = T_{base + i}.
exact_int residual_on_window(const identity_template& t,
                             const std::vector<exact_int>& window, long base, long r) {
    exact_int acc = 0;
    exact_int tmp;
    for (const auto& term : t.terms) {
        const exact_int& v = window[static_cast<size_t>(r - term.offset - base)];
        mpz_pow_ui(tmp.get_mpz_t(), v.get_mpz_t(), t.power);
        acc += term.coeff * tmp;
    }
    for (const auto& cross : t.cross_terms) {
        const exact_int& va = window[static_cast<size_t>(r - cross.a - base)];
        const exact_int& vb = window[static_cast<size_t>(r - cross.b - base)];
        tmp = va * vb;
        acc += cross.coeff * tmp;
    }
    return acc;
}

}  // namespace

const std::vector<identity_template>& builtin_identities() {
    static const std::vector<identity_template> catalog = make_builtins();
    return catalog;
}

const identity_template* find_identity(std::string_view id) {
    for (const auto& t : builtin_identities())
        if (t.id == id) return &t;
    return nullptr;
}

exact_int residual(const identity_template& t, term_cache& cache, long r) {
    const auto [min_off, max_off] = offset_bounds(t);
    const long lo = r - max_off;
    const auto window = cache.range_terms(lo, r - min_off);
    return residual_on_window(t, window, lo, r);
}

exact_int residual(const identity_template& t, const sequence_spec& spec, long r) {
    term_cache cache(spec);
    return residual(t, cache, r);
}

identity_report verify_range(const identity_template& t, term_cache& cache, long r_lo,
                             long r_hi) {
    if (r_lo > r_hi) throw std::invalid_argument("verify_range: empty range");
    validate(t);
    const auto [min_off, max_off] = offset_bounds(t);
    const long lo = r_lo - max_off;
    const auto window = cache.range_terms(lo, r_hi - min_off);

    identity_report report;
    report.id = t.id;
    report.spec = cache.spec();
    report.r_lo = r_lo;
    report.r_hi = r_hi;
    for (long r = r_lo; r <= r_hi; ++r) {
        exact_int res = residual_on_window(t, window, lo, r);
        if (res != 0) report.failures.push_back({r, std::move(res)});
    }
    report.pass = report.failures.empty();
    return report;
}

identity_report verify_range(const identity_template& t, const sequence_spec& spec,
                             long r_lo, long r_hi) {
    term_cache cache(spec);
    return verify_range(t, cache, r_lo, r_hi);
}

nlohmann::json to_json(const identity_template& t) {
    nlohmann::json j;
    j["id"] = t.id;
    j["power"] = t.power;
    j["terms"] = nlohmann::json::array();
    for (const auto& term : t.terms)
        j["terms"].push_back({{"offset", term.offset}, {"coeff", to_string(term.coeff)}});
    if (!t.cross_terms.empty()) {
        j["cross_terms"] = nlohmann::json::array();
        for (const auto& cross : t.cross_terms)
            j["cross_terms"].push_back(
                {{"a", cross.a}, {"b", cross.b}, {"coeff", to_string(cross.coeff)}});
    }
    if (!t.provenance.empty()) j["provenance"] = t.provenance;
    return j;
}

identity_template template_from_json(const nlohmann::json& j) {
    identity_template t;
    t.id = j.at("id").get<std::string>();
    t.power = j.at("power").get<unsigned>();
    for (const auto& term : j.at("terms"))
        t.terms.push_back(
            {term.at("offset").get<long>(), parse_int(term.at("coeff").get<std::string>())});
    if (j.contains("cross_terms"))
        for (const auto& cross : j.at("cross_terms"))
            t.cross_terms.push_back({cross.at("a").get<long>(), cross.at("b").get<long>(),
                                     parse_int(cross.at("coeff").get<std::string>())});
    if (j.contains("provenance")) t.provenance = j.at("provenance").get<std::string>();
    validate(t);
    return t;
}

nlohmann::json to_json(const identity_report& report) {
    nlohmann::json j;
    j["id"] = report.id;
    j["seed"] = to_string(report.spec);
    j["range"] = {{"lo", report.r_lo}, {"hi", report.r_hi}};
    j["pass"] = report.pass;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"r", f.r}, {"residual", to_string(f.residual)}});
    return j;
}

}  // namespace trib
