#include <doctest.h>

#include "trib/recurrence.hpp"
#include "trib/util.hpp"

using trib::exact_rat;
using trib::linear_recurrence;
using trib::sequence_spec;

TEST_CASE("the defining recurrence wrapper reproduces the terms") {
    const auto spec = sequence_spec{3, 1, 4};
    const auto rec = trib::term_recurrence(spec);
    trib::term_cache cache(spec);
    for (long j = -12; j <= 20; ++j) CHECK(rec.value(j) == exact_rat(cache.term(j)));
}

TEST_CASE("the order-6 recurrence generates the squared terms both ways") {
    trib::rng64 rng(31);
    for (const auto& spec : trib::random_specs(4, rng)) {
        const auto rec = trib::squared_term_recurrence(spec);
        trib::term_cache cache(spec);
        for (long j = -12; j <= 20; ++j) {
            const trib::exact_int t = cache.term(j);
            CHECK(rec.value(j) == exact_rat(t * t));
        }
    }
}

TEST_CASE("backward extension divides through the trailing tap") {
    // X_j = 2 X_{j-1}: one seed is enough, and negative indices are halves.
    const linear_recurrence geo({{1, 2}}, 0, {1});
    CHECK(geo.value(5) == 32);
    CHECK(geo.value(-1) == exact_rat(1, 2));
    CHECK(geo.value(-3) == exact_rat(1, 8));
    CHECK(geo.values(-2, 2) ==
          std::vector<exact_rat>{exact_rat(1, 4), exact_rat(1, 2), 1, 2, 4});
}

TEST_CASE("construction rejects malformed recurrences") {
    CHECK_THROWS_AS(linear_recurrence({}, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(linear_recurrence({{0, 1}}, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(linear_recurrence({{1, 0}}, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(linear_recurrence({{1, 1}, {1, 2}}, 0, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(linear_recurrence({{2, 1}, {1, 1}}, 0, {1}),
                    std::invalid_argument);  // seeds shorter than max shift
    // extra seed values must obey the recurrence: X_2 != X_1 + X_0 here
    CHECK_THROWS_AS(linear_recurrence({{1, 1}, {2, 1}}, 0, {1, 1, 3}),
                    std::invalid_argument);
    CHECK_NOTHROW(linear_recurrence({{1, 1}, {2, 1}}, 0, {1, 1, 2}));
}

TEST_CASE("values rejects an inverted range") {
    const auto rec = trib::term_recurrence(sequence_spec::tribonacci());
    CHECK_THROWS_AS((void)rec.values(2, 1), std::invalid_argument);
}
