#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "trib/errors.hpp"
#include "trib/genfunc.hpp"
#include "trib/sums.hpp"
#include "trib/util.hpp"

using trib::exact_rat;
using trib::polynomial;
using trib::rational_function;
using trib::sequence_spec;

TEST_CASE("polynomial basics") {
    CHECK(polynomial{}.degree() == polynomial::zero_degree);
    CHECK(polynomial{0, 0}.is_zero());
    CHECK(polynomial{1, 0}.degree() == 0);
    CHECK(polynomial{1, 2, 3}.eval(2) == 17);
    CHECK((polynomial{1, 1} * polynomial{1, -1}) == polynomial{1, 0, -1});
    CHECK((polynomial{1, 2} + polynomial{0, -2, 5}) == polynomial{1, 0, 5});
    CHECK((-polynomial{1, -2}) == polynomial{-1, 2});
    CHECK(polynomial{1, 1}.shifted(2) == polynomial{0, 0, 1, 1});
}

TEST_CASE("expanded denominator mirrors the order-6 square recurrence") {
    // negated non-leading coefficients are the recurrence taps 2,3,6,-1,0,-1
    CHECK(trib::square_sum_denominator() == polynomial{1, -2, -3, -6, 1, 0, 1});
}

TEST_CASE("recurrence closure: plain sequence") {
    const auto rf = trib::generating_function(trib::term_recurrence(sequence_spec::tribonacci()));
    // x / (1 - x - x^2 - x^3)
    CHECK(rf.equals(rational_function(polynomial{0, 1}, polynomial{1, -1, -1, -1})));
    CHECK(trib::series_coefficients(rf, 7) ==
          std::vector<exact_rat>{0, 1, 1, 2, 4, 7, 13});
}

TEST_CASE("recurrence closure: zero sequence") {
    const auto rf = trib::generating_function(trib::term_recurrence(sequence_spec{0, 0, 0}));
    CHECK(rf.num.is_zero());
    for (const auto& c : trib::series_coefficients(rf, 6)) CHECK(c == 0);
}

TEST_CASE("recurrence closure agrees with the direct squares construction") {
    trib::rng64 rng(51);
    auto specs = trib::random_specs(4, rng);
    specs.push_back(sequence_spec::tribonacci());
    for (const auto& spec : specs) {
        const auto via_rec = trib::generating_function(trib::squared_term_recurrence(spec));
        const auto direct = trib::squares_generating_function(spec);
        CHECK(via_rec.equals(direct));
    }
}

TEST_CASE("squares generating function: canonical seed collapses to x(1-x-x^2-x^3)/D") {
    const auto rf = trib::squares_generating_function(sequence_spec::tribonacci());
    CHECK(rf.equals(rational_function(polynomial{0, 1, -1, -1, -1},
                                      trib::square_sum_denominator())));
    CHECK(trib::series_coefficients(rf, 8) ==
          std::vector<exact_rat>{0, 1, 1, 4, 16, 49, 169, 576});
}

TEST_CASE("squares generating function: degenerate and shifted seeds") {
    CHECK(trib::squares_generating_function(sequence_spec{0, 0, 0}).num.is_zero());
    CHECK(trib::series_coefficients(trib::squares_generating_function(sequence_spec{1, 1, 1}),
                                    1)[0] == 1);
    CHECK(trib::series_coefficients(trib::squares_generating_function(sequence_spec{1, 0, 2}),
                                    6) == std::vector<exact_rat>{1, 0, 4, 9, 25, 100});
}

TEST_CASE("series coefficients match squared terms for random seeds") {
    trib::rng64 rng(52);
    for (const auto& spec : trib::random_specs(6, rng)) {
        const auto coeffs =
            trib::series_coefficients(trib::squares_generating_function(spec), 64);
        trib::term_cache cache(spec);
        for (long j = 0; j < 64; ++j) {
            const trib::exact_int t = cache.term(j);
            CHECK(coeffs[static_cast<size_t>(j)] == exact_rat(t * t));
        }
    }
}

TEST_CASE("series expansion normalizes non-unit constant terms and rejects zero") {
    const rational_function geometric(polynomial{1}, polynomial{1, -1});
    CHECK(trib::series_coefficients(geometric, 4) == std::vector<exact_rat>{1, 1, 1, 1});

    const rational_function scaled(polynomial{1}, polynomial{2, -2});
    CHECK(trib::series_coefficients(scaled, 3) ==
          std::vector<exact_rat>{exact_rat(1, 2), exact_rat(1, 2), exact_rat(1, 2)});

    const rational_function bad(polynomial{1}, polynomial{0, 1});
    CHECK_THROWS_AS((void)trib::series_coefficients(bad, 3), trib::non_unit_constant_term);
}

TEST_CASE("rational function construction and equality") {
    CHECK_THROWS_AS(rational_function(polynomial{1}, polynomial{}), std::invalid_argument);
    // unreduced forms compare equal by cross-multiplication
    const rational_function a(polynomial{0, 1}, polynomial{1, -1});
    const rational_function b(polynomial{0, 2}, polynomial{2, -2});
    CHECK(a.equals(b));
    CHECK(!a.equals(rational_function(polynomial{1}, polynomial{1, -1})));
}

namespace {

// Smallest positive root of 1 - 3x - x^2 - x^3 by bisection.
double bisect_root() {
    auto f = [](double x) { return 1 - 3 * x - x * x - x * x * x; };
    double lo = 0.2, hi = 0.4;
    for (int i = 0; i < 80; ++i) {
        const double mid = (lo + hi) / 2;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("radius estimate: smallest-modulus denominator root") {
    const auto g = trib::squares_generating_function(sequence_spec::tribonacci());
    const double radius = trib::convergence_radius_estimate(g);
    CHECK(std::abs(radius - bisect_root()) < 1e-6);
    CHECK(std::abs(radius - 0.2956) < 1e-4);

    const rational_function geometric(polynomial{1}, polynomial{1, -1});
    CHECK(std::abs(trib::convergence_radius_estimate(geometric) - 1.0) < 1e-9);
    const rational_function half(polynomial{1}, polynomial{1, exact_rat(-1, 2)});
    CHECK(std::abs(trib::convergence_radius_estimate(half) - 2.0) < 1e-9);

    CHECK_THROWS_AS((void)trib::convergence_radius_estimate(
                        rational_function(polynomial{1}, polynomial{2})),
                    std::invalid_argument);
}

TEST_CASE("partial sums converge to the rational function inside the radius") {
    // floating-point evaluation only in this numeric convergence check
    for (const auto& spec : {sequence_spec::tribonacci(), sequence_spec{3, 1, 4}}) {
        const auto rf = trib::squares_generating_function(spec);
        for (const auto& x : {exact_rat(1, 4), exact_rat(-1, 4), exact_rat(1, 5)}) {
            const exact_rat limit = rf.num.eval(x) / rf.den.eval(x);
            const exact_rat partial = trib::weighted_square_sum(spec, x, 200);
            const double expected = limit.get_d();
            const double got = partial.get_d();
            CHECK(std::abs(got - expected) <=
                  1e-9 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("rational function JSON round-trips with p/q strings") {
    const auto rf = trib::squares_generating_function(sequence_spec{2, -3, 5});
    const auto j = trib::to_json(rf);
    CHECK(j.contains("num"));
    CHECK(j.contains("den"));
    CHECK(trib::rational_function_from_json(j).equals(rf));

    const rational_function halves(polynomial{exact_rat(1, 2)}, polynomial{1, exact_rat(-1, 3)});
    const auto jh = trib::to_json(halves);
    CHECK(jh["num"][0] == "1/2");
    CHECK(jh["den"][1] == "-1/3");
    CHECK(trib::rational_function_from_json(jh).equals(halves));
}
