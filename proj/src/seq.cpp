#include "trib/seq.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace trib {

std::string to_string(const sequence_spec& spec) {
    return spec.t0.get_str() + "," + spec.t1.get_str() + "," + spec.t2.get_str();
}

term_cache::term_cache(sequence_spec spec) : spec_(std::move(spec)), base_(0) {
    values_.reserve(64);
    values_.push_back(spec_.t0);
    values_.push_back(spec_.t1);
    values_.push_back(spec_.t2);
}

exact_int term_cache::term(long n) {
    std::scoped_lock lock(mu_);
    extend_locked(n, n);
    return at(n);
}

std::vector<exact_int> term_cache::range_terms(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("range_terms: lo > hi");
    std::scoped_lock lock(mu_);
    extend_locked(lo, hi);
    return {values_.begin() + (lo - base_), values_.begin() + (hi - base_) + 1};
}

void term_cache::prefetch(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("prefetch: lo > hi");
    std::scoped_lock lock(mu_);
    extend_locked(lo, hi);
}

long term_cache::known_lo() const {
    std::scoped_lock lock(mu_);
    return base_;
}

long term_cache::known_hi() const {
    std::scoped_lock lock(mu_);
    return base_ + static_cast<long>(values_.size()) - 1;
}

void term_cache::extend_locked(long lo, long hi) {
    const long cur_lo = base_;
    long cur_hi = base_ + static_cast<long>(values_.size()) - 1;

    long need_hi = hi;
    // The backward route T_n = 2 T_{n+3} - T_{n+4} reads four terms above n.
    if (lo < cur_lo) need_hi = std::max(need_hi, cur_lo + 3);
    if (need_hi > cur_hi) {
        for (long n = cur_hi + 1; n <= need_hi; ++n)
            values_.push_back(at(n - 1) + at(n - 2) + at(n - 3));
        cur_hi = need_hi;
    }
    if (lo < cur_lo) {
        // Amortized doubling downward; the prepend shift is O(current size).
        const long span = cur_hi - cur_lo + 1;
        const long target = std::min(lo, cur_lo - span);
        std::vector<exact_int> grown;
        grown.reserve(values_.size() + static_cast<size_t>(cur_lo - target));
        grown.resize(static_cast<size_t>(cur_lo - target));
        for (auto& v : values_) grown.push_back(std::move(v));
        values_ = std::move(grown);
        base_ = target;
        for (long n = cur_lo - 1; n >= target; --n) at(n) = 2 * at(n + 3) - at(n + 4);
    }
}

exact_int term(const sequence_spec& spec, long n) {
    term_cache cache(spec);
    return cache.term(n);
}

std::vector<exact_int> range_terms(const sequence_spec& spec, long lo, long hi) {
    term_cache cache(spec);
    return cache.range_terms(lo, hi);
}

exact_int term_alt(const sequence_spec& spec, long n) {
    // Seeds T_0..T_3 with T_3 = T_0 + T_1 + T_2.
    std::array<exact_int, 4> w = {spec.t0, spec.t1, spec.t2,
                                  spec.t0 + spec.t1 + spec.t2};
    if (0 <= n && n <= 3) return w[static_cast<size_t>(n)];
    if (n > 3) {
        // T_r = 2 T_{r-1} - T_{r-4}; w holds the last four terms.
        for (long r = 4; r <= n; ++r) {
            exact_int next = 2 * w[3] - w[0];
            w = {std::move(w[1]), std::move(w[2]), std::move(w[3]), std::move(next)};
        }
        return w[3];
    }
    // Same relation run downward: T_{r} = 2 T_{r+3} - T_{r+4}.
    for (long r = -1; r >= n; --r) {
        exact_int prev = 2 * w[2] - w[3];
        w = {std::move(prev), std::move(w[0]), std::move(w[1]), std::move(w[2])};
    }
    return w[0];
}

companion_matrix companion_matrix::identity() {
    companion_matrix m;
    m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return m;
}

companion_matrix companion_matrix::step() {
    companion_matrix m;
    m.a = {1, 1, 1, 1, 0, 0, 0, 1, 0};
    return m;
}

companion_matrix companion_matrix::step_inverse() {
    companion_matrix m;
    m.a = {0, 1, 0, 0, 0, 1, 1, -1, -1};
    return m;
}

companion_matrix companion_matrix::operator*(const companion_matrix& rhs) const {
    companion_matrix out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            exact_int sum = a[3 * i] * rhs.a[j];
            sum += a[3 * i + 1] * rhs.a[3 + j];
            sum += a[3 * i + 2] * rhs.a[6 + j];
            out.a[3 * i + j] = std::move(sum);
        }
    }
    return out;
}

exact_int companion_matrix::determinant() const {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

companion_matrix pow(const companion_matrix& m, unsigned long e) {
    companion_matrix result = companion_matrix::identity();
    companion_matrix base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

exact_int term_fast(const sequence_spec& spec, long n) {
    const auto e = static_cast<unsigned long>(n < 0 ? -n : n);
    const companion_matrix p =
        pow(n < 0 ? companion_matrix::step_inverse() : companion_matrix::step(), e);
    // (T_{n+2}, T_{n+1}, T_n)^T = P * (T_2, T_1, T_0)^T; read the last row.
    return p.a[6] * spec.t2 + p.a[7] * spec.t1 + p.a[8] * spec.t0;
}

}  // namespace trib
