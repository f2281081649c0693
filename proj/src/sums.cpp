#include "trib/sums.hpp"

#include <stdexcept>
#include <utility>

#include "trib/errors.hpp"
#include "trib/genfunc.hpp"

namespace trib {

std::string_view to_string(sum_variant v) {
    switch (v) {
        case sum_variant::gen_all: return "GEN_ALL";
        case sum_variant::gen_alt: return "GEN_ALT";
        case sum_variant::trib_all: return "TRIB_ALL";
        case sum_variant::trib_alt: return "TRIB_ALT";
        case sum_variant::even: return "EVEN";
        case sum_variant::odd: return "ODD";
        case sum_variant::alt_even: return "ALT_EVEN";
        case sum_variant::alt_odd: return "ALT_ODD";
        case sum_variant::quad_0: return "QUAD_0";
        case sum_variant::quad_2: return "QUAD_2";
        case sum_variant::quad_3: return "QUAD_3";
        case sum_variant::quad_1: return "QUAD_1";
        case sum_variant::j_weight: return "J_WEIGHT";
        case sum_variant::j2_weight: return "J2_WEIGHT";
    }
    return "?";
}

std::optional<sum_variant> sum_variant_from_string(std::string_view s) {
    for (sum_variant v : all_sum_variants)
        if (to_string(v) == s) return v;
    return std::nullopt;
}

long sum_lower_bound(sum_variant v) {
    switch (v) {
        case sum_variant::odd:
        case sum_variant::alt_odd:
        case sum_variant::quad_2:
        case sum_variant::quad_3:
            return 1;
        default:
            return 0;
    }
}

bool tribonacci_only(sum_variant v) {
    switch (v) {
        case sum_variant::gen_all:
        case sum_variant::gen_alt:
        case sum_variant::j_weight:
        case sum_variant::j2_weight:
            return false;
        default:
            return true;
    }
}

exact_rat weighted_partial_sum(const linear_recurrence& rec, const exact_rat& x,
                               long k) {
    if (k < 0) throw std::invalid_argument("weighted_partial_sum: k must be >= 0");
    // The boundary-term formula needs negative powers of x; at x = 0 the sum
    // collapses to its j = 0 term.
    if (x == 0) return rec.value(0);

    exact_rat denom = 1;
    for (const auto& tap : rec.taps()) denom -= tap.coeff * pow_rat(x, tap.shift);
    if (denom == 0)
        throw denominator_zero("weighted_partial_sum: denominator vanishes at x = " +
                               to_string(x));

    exact_rat numer = 0;
    for (const auto& tap : rec.taps()) {
        exact_rat inner = 0;
        for (long j = 1; j <= tap.shift; ++j) inner += pow_rat(x, -j) * rec.value(-j);
        for (long j = k - tap.shift + 1; j <= k; ++j)
            inner -= pow_rat(x, j) * rec.value(j);
        numer += pow_rat(x, tap.shift) * tap.coeff * inner;
    }
    return numer / denom;
}

exact_rat weighted_square_sum(const sequence_spec& spec, const exact_rat& x, long k) {
    if (k < 0) throw std::invalid_argument("weighted_square_sum: k must be >= 0");
    if (x == 0) {
        exact_int sq = spec.t0 * spec.t0;
        return exact_rat(sq);
    }

    const exact_rat denom = square_sum_denominator_factor_a().eval(x) *
                            square_sum_denominator_factor_b().eval(x);
    if (denom == 0)
        throw denominator_zero("weighted_square_sum: denominator vanishes at x = " +
                               to_string(x));

    term_cache cache(spec);
    const auto back = cache.range_terms(-6, -1);   // T_{-6} .. T_{-1}
    const auto head = cache.range_terms(k - 5, k); // T_{k-5} .. T_k
    const exact_rat xk1 = pow_rat(x, k + 1);

    exact_rat sum = 0;
    for (long i = 1; i <= 6; ++i) {
        const exact_int& lo = back[static_cast<size_t>(6 - i)];     // T_{-i}
        const exact_int& hi = head[static_cast<size_t>(6 - i)];     // T_{k-i+1}
        exact_int lo_sq = lo * lo;
        exact_int hi_sq = hi * hi;
        sum += squares_boundary_weights()[static_cast<size_t>(i - 1)].eval(x) *
               (exact_rat(lo_sq) - xk1 * exact_rat(hi_sq));
    }
    return sum / denom;
}

namespace {

exact_rat eighth(const exact_int& v) { return exact_rat(v) / 8; }

exact_rat sixteenth(const exact_int& v) { return exact_rat(v) / 16; }

// Squares T_{base-0}^2 .. T_{base-5}^2 (s[i] = T_{base-i}^2).
std::array<exact_int, 6> trailing_squares(term_cache& cache, long base) {
    const auto terms = cache.range_terms(base - 5, base);
    std::array<exact_int, 6> s;
    for (long i = 0; i <= 5; ++i) {
        const exact_int& t = terms[static_cast<size_t>(5 - i)];
        s[static_cast<size_t>(i)] = t * t;
    }
    return s;
}

}  // namespace

exact_rat special_sum(const sequence_spec& spec, sum_variant v, long k) {
    if (k < 0) throw std::invalid_argument("special_sum: k must be >= 0");
    if (tribonacci_only(v) && !(spec == sequence_spec::tribonacci()))
        throw variant_spec_mismatch(std::string(to_string(v)) +
                                    " holds only for the seed 0,1,1");

    term_cache cache(spec);
    const long s = (k % 2 == 0) ? 1 : -1;  // (-1)^k

    switch (v) {
        case sum_variant::gen_all: {
            const auto t = trailing_squares(cache, k);   // T_{k-i}^2
            const auto b = trailing_squares(cache, -1);  // T_{-1-i}^2
            return eighth(9 * (t[0] - b[0]) + 7 * (t[1] - b[1]) + 4 * (t[2] - b[2]) -
                          2 * (t[3] - b[3]) - (t[4] - b[4]) - (t[5] - b[5]));
        }
        case sum_variant::gen_alt: {
            const auto t = trailing_squares(cache, k);
            const auto b = trailing_squares(cache, -1);
            return eighth(7 * (b[0] + s * t[0]) - 5 * (b[1] + s * t[1]) +
                          8 * (b[2] + s * t[2]) - 2 * (b[3] + s * t[3]) +
                          (b[4] + s * t[4]) - (b[5] + s * t[5]));
        }
        case sum_variant::trib_all: {
            const auto t = trailing_squares(cache, k);
            return eighth(9 * t[0] + 7 * t[1] + 4 * t[2] - 2 * t[3] - t[4] - t[5] + 2);
        }
        case sum_variant::trib_alt: {
            const auto t = trailing_squares(cache, k);
            return eighth(
                s * (7 * t[0] - 5 * t[1] + 8 * t[2] - 2 * t[3] + t[4] - t[5]) - 2);
        }
        case sum_variant::even: {
            const auto t = trailing_squares(cache, 2 * k);  // T_{2k-i}^2
            return eighth(8 * t[0] + t[1] + 6 * t[2] - 2 * t[3] - t[5]);
        }
        case sum_variant::odd: {
            const auto t = trailing_squares(cache, 2 * k);
            return eighth(t[0] + 6 * t[1] - 2 * t[2] - t[4] + 2);
        }
        case sum_variant::alt_even: {
            const auto t = trailing_squares(cache, 2 * k);
            return eighth(s * (7 * t[0] + 3 * t[1] - 6 * t[2] - t[4] + t[5]) + 2);
        }
        case sum_variant::alt_odd: {
            const auto t = trailing_squares(cache, 2 * k);
            return eighth(s * (t[0] - 9 * t[1] - 6 * t[2] + t[4] + t[5]) + 2);
        }
        case sum_variant::quad_0: {
            const auto t = trailing_squares(cache, 4 * k);  // T_{4k-i}^2
            return sixteenth(15 * t[0] + 4 * t[1] - 2 * t[3] - t[4] + 2);
        }
        case sum_variant::quad_2: {
            const auto t = trailing_squares(cache, 4 * k);
            return sixteenth(t[0] - 2 * t[1] + 12 * t[2] - 2 * t[3] + t[4] - 2 * t[5] -
                             2);
        }
        case sum_variant::quad_3: {
            const auto t = trailing_squares(cache, 4 * k);
            return sixteenth(2 * t[0] - 3 * t[1] - 8 * t[2] + t[5] + 4);
        }
        case sum_variant::quad_1: {
            const auto t = trailing_squares(cache, 4 * k - 1);  // T_{4k-1-i}^2
            return sixteenth(15 * t[0] + 4 * t[1] - 2 * t[3] - t[4]);
        }
        case sum_variant::j_weight: {
            const auto t = trailing_squares(cache, k);
            const auto b = trailing_squares(cache, -1);
            return eighth((9 * k - 2) * t[0] + 7 * (k - 1) * t[1] +
                          4 * (k - 2) * t[2] - 2 * k * t[3] - k * t[4] -
                          (k - 1) * t[5] + 11 * b[0] + 14 * b[1] + 12 * b[2] -
                          2 * b[3] - b[4] - 2 * b[5]);
        }
        case sum_variant::j2_weight: {
            const auto t = trailing_squares(cache, k);
            const auto b = trailing_squares(cache, -1);
            const long k2 = k * k;
            return eighth((9 * k2 - 4 * k + 6) * t[0] + (7 * k2 - 14 * k + 7) * t[1] +
                          (4 * k2 - 16 * k + 10) * t[2] - (2 * k2 + 6) * t[3] -
                          (k2 + 2) * t[4] - (k2 - 2 * k + 3) * t[5] - 19 * b[0] -
                          28 * b[1] - 30 * b[2] + 8 * b[3] + 3 * b[4] + 6 * b[5]);
        }
    }
    throw std::logic_error("unhandled sum variant");
}

exact_rat direct_sum_oracle(const sequence_spec& spec, sum_variant v, long k) {
    if (k < 0) throw std::invalid_argument("direct_sum_oracle: k must be >= 0");
    term_cache cache(spec);
    exact_int acc = 0;
    const long lb = sum_lower_bound(v);
    for (long j = lb; j <= k; ++j) {
        long index = j;
        exact_int weight = 1;
        switch (v) {
            case sum_variant::gen_all:
            case sum_variant::trib_all:
                break;
            case sum_variant::gen_alt:
            case sum_variant::trib_alt:
                weight = (j % 2 == 0) ? 1 : -1;
                break;
            case sum_variant::even:
                index = 2 * j;
                break;
            case sum_variant::odd:
                index = 2 * j - 1;
                break;
            case sum_variant::alt_even:
                index = 2 * j;
                weight = (j % 2 == 0) ? 1 : -1;
                break;
            case sum_variant::alt_odd:
                index = 2 * j - 1;
                weight = (j % 2 == 1) ? 1 : -1;
                break;
            case sum_variant::quad_0:
                index = 4 * j;
                break;
            case sum_variant::quad_2:
                index = 4 * j - 2;
                break;
            case sum_variant::quad_3:
                index = 4 * j - 3;
                break;
            case sum_variant::quad_1:
                index = 4 * j - 1;
                break;
            case sum_variant::j_weight:
                weight = j;
                break;
            case sum_variant::j2_weight:
                weight = exact_int(j) * j;
                break;
        }
        const exact_int t = cache.term(index);
        acc += weight * t * t;
    }
    return exact_rat(acc);
}

exact_rat direct_weighted_square_sum(const sequence_spec& spec, const exact_rat& x,
                                     long k) {
    if (k < 0) throw std::invalid_argument("direct_weighted_square_sum: k must be >= 0");
    term_cache cache(spec);
    exact_rat acc = 0;
    exact_rat xj = 1;  // x^j
    for (long j = 0; j <= k; ++j) {
        const exact_int t = cache.term(j);
        exact_int sq = t * t;
        acc += xj * exact_rat(sq);
        xj *= x;
    }
    return acc;
}

exact_rat direct_weighted_partial_sum(const linear_recurrence& rec, const exact_rat& x,
                                      long k) {
    if (k < 0) throw std::invalid_argument("direct_weighted_partial_sum: k must be >= 0");
    exact_rat acc = 0;
    exact_rat xj = 1;
    for (long j = 0; j <= k; ++j) {
        acc += xj * rec.value(j);
        xj *= x;
    }
    return acc;
}

sum_report compare(const sequence_spec& spec, sum_variant v, long k) {
    sum_report report;
    report.variant = v;
    report.k = k;
    report.closed = special_sum(spec, v, k);
    report.oracle = direct_sum_oracle(spec, v, k);
    report.equal = report.closed == report.oracle;
    return report;
}

nlohmann::json to_json(const sum_report& report) {
    return {{"variant", std::string(to_string(report.variant))},
            {"k", report.k},
            {"closed", to_string(report.closed)},
            {"oracle", to_string(report.oracle)},
            {"equal", report.equal}};
}

std::string to_csv_row(const sum_report& report) {
    return std::string(to_string(report.variant)) + "," + std::to_string(report.k) +
           "," + to_string(report.closed) + "," + to_string(report.oracle) + "," +
           (report.equal ? "true" : "false");
}

}  // namespace trib
