#include "trib/recurrence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace trib {

linear_recurrence::linear_recurrence(std::vector<recurrence_tap> taps, long seed_start,
                                     std::vector<exact_rat> seeds)
    : taps_(std::move(taps)), base_(seed_start), cache_(std::move(seeds)) {
    if (taps_.empty()) throw std::invalid_argument("recurrence needs at least one tap");
    std::set<long> shifts;
    max_shift_ = 0;
    for (const auto& tap : taps_) {
        if (tap.shift < 1) throw std::invalid_argument("tap shift must be >= 1");
        if (tap.coeff == 0) throw std::invalid_argument("tap coefficient must be nonzero");
        if (!shifts.insert(tap.shift).second)
            throw std::invalid_argument("duplicate tap shift");
        max_shift_ = std::max(max_shift_, tap.shift);
    }
    if (static_cast<long>(cache_.size()) < max_shift_)
        throw std::invalid_argument("seed window shorter than the maximal shift");
    // Seed values beyond the first max_shift must already obey the recurrence.
    for (long j = base_ + max_shift_; j < base_ + static_cast<long>(cache_.size()); ++j)
        if (at(j) != forward_value(j))
            throw std::invalid_argument("seed values violate the recurrence");
}

exact_rat linear_recurrence::forward_value(long j) const {
    exact_rat sum = 0;
    for (const auto& tap : taps_) sum += tap.coeff * at(j - tap.shift);
    return sum;
}

exact_rat linear_recurrence::backward_value(long j) const {
    // Solve X_{j+C} = sum_m f_m X_{j+C-c_m} for X_j, C the maximal shift.
    exact_rat sum = at(j + max_shift_);
    const exact_rat* lead = nullptr;
    for (const auto& tap : taps_) {
        if (tap.shift == max_shift_)
            lead = &tap.coeff;
        else
            sum -= tap.coeff * at(j + max_shift_ - tap.shift);
    }
    return sum / *lead;
}

void linear_recurrence::extend_locked(long lo, long hi) const {
    const long cur_lo = base_;
    const long cur_hi = base_ + static_cast<long>(cache_.size()) - 1;
    if (hi > cur_hi)
        for (long j = cur_hi + 1; j <= hi; ++j) cache_.push_back(forward_value(j));
    if (lo < cur_lo) {
        const long span = std::max(cur_hi, hi) - cur_lo + 1;
        const long target = std::min(lo, cur_lo - span);
        std::vector<exact_rat> grown;
        grown.reserve(cache_.size() + static_cast<size_t>(cur_lo - target));
        grown.resize(static_cast<size_t>(cur_lo - target));
        for (auto& v : cache_) grown.push_back(std::move(v));
        cache_ = std::move(grown);
        base_ = target;
        for (long j = cur_lo - 1; j >= target; --j) at(j) = backward_value(j);
    }
}

exact_rat linear_recurrence::value(long j) const {
    std::scoped_lock lock(mu_);
    extend_locked(j, j);
    return at(j);
}

std::vector<exact_rat> linear_recurrence::values(long lo, long hi) const {
    if (lo > hi) throw std::invalid_argument("values: lo > hi");
    std::scoped_lock lock(mu_);
    extend_locked(lo, hi);
    return {cache_.begin() + (lo - base_), cache_.begin() + (hi - base_) + 1};
}

linear_recurrence squared_term_recurrence(const sequence_spec& spec) {
    const auto terms = range_terms(spec, -6, -1);
    std::vector<exact_rat> seeds;
    seeds.reserve(6);
    for (const auto& t : terms) {
        exact_int sq = t * t;
        seeds.emplace_back(sq);
    }
    return linear_recurrence({{1, 2}, {2, 3}, {3, 6}, {4, -1}, {6, -1}}, -6,
                             std::move(seeds));
}

linear_recurrence term_recurrence(const sequence_spec& spec) {
    const auto terms = range_terms(spec, -3, -1);
    std::vector<exact_rat> seeds(terms.begin(), terms.end());
    return linear_recurrence({{1, 1}, {2, 1}, {3, 1}}, -3, std::move(seeds));
}

}  // namespace trib
