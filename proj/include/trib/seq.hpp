#pragma once

#include <array>
#include <mutex>
#include <vector>

#include "trib/scalar.hpp"

namespace trib {

// Initial values T_0, T_1, T_2 of one generalized Tribonacci sequence
// T_n = T_{n-1} + T_{n-2} + T_{n-3}, extended to all integer n.
struct sequence_spec {
    exact_int t0;
    exact_int t1;
    exact_int t2;

    bool operator==(const sequence_spec&) const = default;

    // The classical seed (0, 1, 1).
    static sequence_spec tribonacci() { return {0, 1, 1}; }
};

std::string to_string(const sequence_spec& spec);

// Memoized terms of one sequence over a contiguous index interval [lo, hi].
// Indices 0..2 are always inside the interval. Extension is amortized
// doubling in each direction; all public calls are internally synchronized,
// and range_terms() hands out an immutable snapshot for lock-free sweeps.
class term_cache {
public:
    explicit term_cache(sequence_spec spec);

    const sequence_spec& spec() const { return spec_; }

    // T_n for any integer n, growing the cache as needed.
    exact_int term(long n);

    // Copies [T_lo, ..., T_hi]; rejects lo > hi.
    std::vector<exact_int> range_terms(long lo, long hi);

    // Ensures [lo, hi] is materialized.
    void prefetch(long lo, long hi);

    long known_lo() const;
    long known_hi() const;

private:
    void extend_locked(long lo, long hi);
    exact_int& at(long n) { return values_[static_cast<size_t>(n - base_)]; }

    sequence_spec spec_;
    long base_;  // index of values_[0]
    std::vector<exact_int> values_;
    mutable std::mutex mu_;
};

// One-shot conveniences over a transient cache.
exact_int term(const sequence_spec& spec, long n);
std::vector<exact_int> range_terms(const sequence_spec& spec, long lo, long hi);

// Same terms via the first-difference recurrence T_n = 2 T_{n-1} - T_{n-4},
// seeded from T_0..T_3; an independent route used for equivalence checks.
exact_int term_alt(const sequence_spec& spec, long n);

// O(log |n|) path: binary powers of the companion matrix applied to the
// seed state, with the exact integer inverse matrix for n < 0.
exact_int term_fast(const sequence_spec& spec, long n);

// 3x3 exact-integer matrix advancing the state (T_{n+2}, T_{n+1}, T_n).
struct companion_matrix {
    std::array<exact_int, 9> a;  // row-major

    static companion_matrix identity();
    static companion_matrix step();          // [[1,1,1],[1,0,0],[0,1,0]]
    static companion_matrix step_inverse();  // [[0,1,0],[0,0,1],[1,-1,-1]]

    companion_matrix operator*(const companion_matrix& rhs) const;
    bool operator==(const companion_matrix&) const = default;

    exact_int determinant() const;
};

companion_matrix pow(const companion_matrix& m, unsigned long e);

}  // namespace trib
