#include <doctest.h>

#include <vector>

#include "trib/errors.hpp"
#include "trib/sums.hpp"
#include "trib/util.hpp"

using trib::exact_int;
using trib::exact_rat;
using trib::sequence_spec;
using trib::sum_variant;

namespace {

const std::vector<exact_rat> x_grid = {exact_rat(-2), exact_rat(-1), exact_rat(-1, 2),
                                       exact_rat(1, 3), exact_rat(1), exact_rat(7, 5)};

}  // namespace

TEST_CASE("boundary-term partial sum: frozen values") {
    const auto squares = trib::squared_term_recurrence(sequence_spec::tribonacci());
    CHECK(trib::weighted_partial_sum(squares, 1, 5) == 71);  // 0+1+1+4+16+49

    const auto plain = trib::term_recurrence(sequence_spec::tribonacci());
    CHECK(trib::weighted_partial_sum(plain, 1, 6) == 28);  // 0+1+1+2+4+7+13

    // k = 0 collapses to X_0 for any valid x
    CHECK(trib::weighted_partial_sum(squares, exact_rat(7, 5), 0) == 0);
    CHECK(trib::weighted_partial_sum(plain, exact_rat(-2), 0) == 0);
    CHECK(trib::weighted_partial_sum(trib::term_recurrence(sequence_spec{5, 1, 1}), 3, 0) ==
          5);
}

TEST_CASE("boundary-term partial sum equals direct summation") {
    trib::rng64 rng(41);
    for (const auto& spec : trib::random_specs(3, rng)) {
        const auto rec = trib::squared_term_recurrence(spec);
        for (const auto& x : x_grid)
            for (long k = 0; k <= 30; ++k)
                CHECK(trib::weighted_partial_sum(rec, x, k) ==
                      trib::direct_weighted_partial_sum(rec, x, k));
    }
}

TEST_CASE("boundary-term partial sum: error paths") {
    // X_j = X_{j-1}: the denominator 1 - x vanishes at x = 1.
    const trib::linear_recurrence constant({{1, 1}}, 0, {1});
    CHECK_THROWS_AS((void)trib::weighted_partial_sum(constant, 1, 3),
                    trib::denominator_zero);
    CHECK(trib::weighted_partial_sum(constant, 0, 3) == 1);  // x = 0 special case
    CHECK_THROWS_AS((void)trib::weighted_partial_sum(constant, 1, -1),
                    std::invalid_argument);
}

TEST_CASE("weighted square sum: frozen values") {
    const auto spec = sequence_spec::tribonacci();
    CHECK(trib::weighted_square_sum(spec, 1, 5) == 71);
    CHECK(trib::weighted_square_sum(spec, 0, 9) == 0);  // only T_0^2 survives
    CHECK(trib::weighted_square_sum(spec, exact_rat(-1, 2), 3) == exact_rat(-3, 4));
    CHECK(trib::weighted_square_sum(sequence_spec{5, 0, 0}, 0, 3) == 25);
}

TEST_CASE("weighted square sum equals direct summation") {
    trib::rng64 rng(42);
    auto specs = trib::random_specs(3, rng);
    specs.push_back(sequence_spec::tribonacci());
    for (const auto& spec : specs) {
        for (const auto& x : x_grid)
            for (long k = 0; k <= 25; ++k)
                CHECK(trib::weighted_square_sum(spec, x, k) ==
                      trib::direct_weighted_square_sum(spec, x, k));
        CHECK(trib::weighted_square_sum(spec, 0, 7) ==
              trib::direct_weighted_square_sum(spec, 0, 7));
    }
}

TEST_CASE("weighted square sum specializes to the plain and alternating sums") {
    trib::rng64 rng(43);
    auto specs = trib::random_specs(3, rng);
    specs.push_back(sequence_spec::tribonacci());
    for (const auto& spec : specs) {
        for (long k = 0; k <= 25; ++k) {
            CHECK(trib::weighted_square_sum(spec, 1, k) ==
                  trib::special_sum(spec, sum_variant::gen_all, k));
            CHECK(trib::weighted_square_sum(spec, -1, k) ==
                  trib::special_sum(spec, sum_variant::gen_alt, k));
        }
    }
}

TEST_CASE("the generic engine on the order-6 recurrence matches the square sum") {
    trib::rng64 rng(44);
    auto specs = trib::random_specs(2, rng);
    specs.push_back(sequence_spec::tribonacci());
    for (const auto& spec : specs) {
        const auto rec = trib::squared_term_recurrence(spec);
        for (const auto& x : x_grid)
            for (long k = 0; k <= 20; ++k)
                CHECK(trib::weighted_partial_sum(rec, x, k) ==
                      trib::weighted_square_sum(spec, x, k));
    }
}

TEST_CASE("special sums: frozen values") {
    const auto spec = sequence_spec::tribonacci();
    CHECK(trib::special_sum(spec, sum_variant::trib_all, 5) == 71);
    CHECK(trib::special_sum(spec, sum_variant::even, 1) == 1);    // T_0^2 + T_2^2
    CHECK(trib::special_sum(spec, sum_variant::odd, 0) == 0);     // empty
    CHECK(trib::special_sum(spec, sum_variant::trib_alt, 1) == -1);
    CHECK(trib::special_sum(spec, sum_variant::j_weight, 1) == 1);
    CHECK(trib::special_sum(spec, sum_variant::quad_1, 0) == 0);  // 16 T_{-1}^2 = 0

    // the scaled anchor: 8 * 71 against the boundary-term form at k = 5
    trib::term_cache cache(spec);
    exact_int rhs = 9 * cache.term(5) * cache.term(5) + 7 * cache.term(4) * cache.term(4) +
                    4 * cache.term(3) * cache.term(3) - 2 * cache.term(2) * cache.term(2) -
                    cache.term(1) * cache.term(1) - cache.term(0) * cache.term(0) + 2;
    CHECK(rhs == 568);
    CHECK(exact_rat(rhs) == 8 * trib::special_sum(spec, sum_variant::trib_all, 5));
}

TEST_CASE("direct oracle: frozen values") {
    const auto spec = sequence_spec::tribonacci();
    // squares 0,1,1,4,16 against weights 1,2,4,8,16
    CHECK(trib::direct_weighted_square_sum(spec, 2, 4) == 294);
    CHECK(trib::direct_sum_oracle(spec, sum_variant::j2_weight, 3) == 41);
    CHECK(trib::direct_sum_oracle(spec, sum_variant::odd, 0) == 0);
    CHECK(trib::direct_sum_oracle(spec, sum_variant::quad_2, 0) == 0);
    CHECK(trib::direct_sum_oracle(spec, sum_variant::quad_3, 0) == 0);
}

TEST_CASE("compare: example rows") {
    CHECK(trib::compare(sequence_spec::tribonacci(), sum_variant::gen_all, 30).equal);
    CHECK(trib::compare(sequence_spec{5, -3, 2}, sum_variant::gen_alt, 25).equal);
    CHECK(trib::compare(sequence_spec::tribonacci(), sum_variant::alt_even, 17).equal);
}

TEST_CASE("all fourteen variants equal their oracles") {
    const auto trib_spec = sequence_spec::tribonacci();
    for (sum_variant v : trib::all_sum_variants)
        for (long k = trib::sum_lower_bound(v); k <= 80; ++k) {
            const auto report = trib::compare(trib_spec, v, k);
            CHECK(report.equal);
        }

    trib::rng64 rng(45);
    for (const auto& spec : trib::random_specs(4, rng))
        for (sum_variant v : {sum_variant::gen_all, sum_variant::gen_alt,
                              sum_variant::j_weight, sum_variant::j2_weight})
            for (long k = 0; k <= 60; ++k) CHECK(trib::compare(spec, v, k).equal);
}

TEST_CASE("Tribonacci-only variants reject other seeds") {
    const sequence_spec other{1, 2, 3};
    CHECK_THROWS_AS((void)trib::special_sum(other, sum_variant::trib_all, 5),
                    trib::variant_spec_mismatch);
    CHECK_THROWS_AS((void)trib::special_sum(other, sum_variant::even, 5),
                    trib::variant_spec_mismatch);
    CHECK_THROWS_AS((void)trib::special_sum(other, sum_variant::quad_3, 5),
                    trib::variant_spec_mismatch);
    CHECK_NOTHROW((void)trib::special_sum(other, sum_variant::gen_all, 5));
    CHECK_NOTHROW((void)trib::special_sum(other, sum_variant::j2_weight, 5));
}

TEST_CASE("even and odd sums split the full sum") {
    const auto spec = sequence_spec::tribonacci();
    for (long k = 0; k <= 40; ++k)
        CHECK(trib::special_sum(spec, sum_variant::even, k) +
                  trib::special_sum(spec, sum_variant::odd, k) ==
              trib::direct_sum_oracle(spec, sum_variant::gen_all, 2 * k));
}

TEST_CASE("stride-4 sums reassemble the stride-2 sums") {
    const auto spec = sequence_spec::tribonacci();
    for (long k = 0; k <= 30; ++k) {
        CHECK(trib::special_sum(spec, sum_variant::quad_0, k) +
                  trib::special_sum(spec, sum_variant::quad_2, k) ==
              trib::special_sum(spec, sum_variant::even, 2 * k));
        // T_{-1} = 0 for this seed, so the j = 0 term of QUAD_1 drops out
        CHECK(trib::special_sum(spec, sum_variant::quad_3, k) +
                  trib::special_sum(spec, sum_variant::quad_1, k) ==
              trib::special_sum(spec, sum_variant::odd, 2 * k));
    }
}

TEST_CASE("general weighted forms reduce to the Tribonacci-seed constants") {
    const auto spec = sequence_spec::tribonacci();
    trib::term_cache cache(spec);
    auto sq = [&](long n) -> exact_int {
        const exact_int t = cache.term(n);
        return t * t;
    };
    for (long k = 0; k <= 30; ++k) {
        exact_int j_rhs = (9 * k - 2) * sq(k) + 7 * (k - 1) * sq(k - 1) +
                          4 * (k - 2) * sq(k - 2) - 2 * k * sq(k - 3) - k * sq(k - 4) -
                          (k - 1) * sq(k - 5) + 4;
        CHECK(8 * trib::special_sum(spec, sum_variant::j_weight, k) == exact_rat(j_rhs));
        const long k2 = k * k;
        exact_int j2_rhs = (9 * k2 - 4 * k + 6) * sq(k) + (7 * k2 - 14 * k + 7) * sq(k - 1) +
                           (4 * k2 - 16 * k + 10) * sq(k - 2) - (2 * k2 + 6) * sq(k - 3) -
                           (k2 + 2) * sq(k - 4) - (k2 - 2 * k + 3) * sq(k - 5) + 8;
        CHECK(8 * trib::special_sum(spec, sum_variant::j2_weight, k) == exact_rat(j2_rhs));
    }
}

TEST_CASE("sum reports serialize to JSON and CSV") {
    const auto report = trib::compare(sequence_spec::tribonacci(), sum_variant::trib_all, 5);
    const auto j = trib::to_json(report);
    CHECK(j["variant"] == "TRIB_ALL");
    CHECK(j["k"] == 5);
    CHECK(j["closed"] == "71");
    CHECK(j["oracle"] == "71");
    CHECK(j["equal"] == true);
    CHECK(trib::to_csv_row(report) == "TRIB_ALL,5,71,71,true");
    CHECK(trib::sum_report_csv_header == "variant,k,closed,oracle,equal");
}

TEST_CASE("variant names round-trip") {
    for (sum_variant v : trib::all_sum_variants)
        CHECK(trib::sum_variant_from_string(trib::to_string(v)) == v);
    CHECK(!trib::sum_variant_from_string("NOPE").has_value());
}

TEST_CASE("negative k is rejected") {
    const auto spec = sequence_spec::tribonacci();
    CHECK_THROWS_AS((void)trib::special_sum(spec, sum_variant::gen_all, -1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)trib::direct_sum_oracle(spec, sum_variant::gen_all, -1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)trib::weighted_square_sum(spec, 1, -2), std::invalid_argument);
}
