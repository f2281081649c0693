#include "trib/genfunc.hpp"

#include <utility>
#include <vector>

namespace trib {

polynomial square_sum_denominator_factor_a() { return {1, -3, -1, -1}; }

polynomial square_sum_denominator_factor_b() { return {1, 1, 1, -1}; }

polynomial square_sum_denominator() {
    return square_sum_denominator_factor_a() * square_sum_denominator_factor_b();
}

rational_function generating_function(const linear_recurrence& rec) {
    // numerator   sum_m f_m sum_{j=1}^{c_m} X_{-j} x^{c_m - j}
    // denominator 1 - sum_m f_m x^{c_m}
    const auto seeds = rec.values(-rec.max_shift(), -1);  // X_{-C} .. X_{-1}
    auto seed = [&](long j) -> const exact_rat& {  // X_{-j}
        return seeds[static_cast<size_t>(rec.max_shift() - j)];
    };

    std::vector<exact_rat> num(static_cast<size_t>(rec.max_shift()));
    std::vector<exact_rat> den(static_cast<size_t>(rec.max_shift()) + 1);
    den[0] = 1;
    for (const auto& tap : rec.taps()) {
        for (long j = 1; j <= tap.shift; ++j)
            num[static_cast<size_t>(tap.shift - j)] += tap.coeff * seed(j);
        den[static_cast<size_t>(tap.shift)] -= tap.coeff;
    }
    return {polynomial(std::move(num)), polynomial(std::move(den))};
}

const std::array<polynomial, 6>& squares_boundary_weights() {
    static const std::array<polynomial, 6> weights = {
        polynomial{2, 3, 6, -1, 0, -1},  // 2+3x+6x^2-x^3-x^5
        polynomial{3, 6, -1, 0, -1},     // 3+6x-x^2-x^4
        polynomial{6, -1, 0, -1},        // 6-x-x^3
        polynomial{-1, 0, -1},           // -(1+x^2)
        polynomial{0, -1},               // -x
        polynomial{-1},                  // -1
    };
    return weights;
}

rational_function squares_generating_function(const sequence_spec& spec) {
    const auto terms = range_terms(spec, -6, -1);  // T_{-6} .. T_{-1}
    polynomial num;
    for (long i = 1; i <= 6; ++i) {
        const exact_int& t = terms[static_cast<size_t>(6 - i)];  // T_{-i}
        exact_int sq = t * t;
        num = num + exact_rat(sq) * squares_boundary_weights()[static_cast<size_t>(i - 1)];
    }
    return {std::move(num), square_sum_denominator()};
}

}  // namespace trib
