#pragma once

#include <mutex>
#include <vector>

#include "trib/scalar.hpp"
#include "trib/seq.hpp"

namespace trib {

// One tap of X_j = sum_m coeff_m * X_{j - shift_m}: shift >= 1, coeff != 0.
struct recurrence_tap {
    long shift;
    exact_rat coeff;
};

// A fixed-coefficient linear recurrence with enough consecutive seed values
// to generate the sequence in both directions. Backward extension solves for
// the most-shifted term, so the tap at the maximal shift must be nonzero
// (all taps are required nonzero, and shifts distinct).
class linear_recurrence {
public:
    // seeds are the consecutive values X_{seed_start} .. X_{seed_start+len-1},
    // len >= max shift. Extra seed values are checked against the recurrence.
    linear_recurrence(std::vector<recurrence_tap> taps, long seed_start,
                      std::vector<exact_rat> seeds);

    const std::vector<recurrence_tap>& taps() const { return taps_; }
    long max_shift() const { return max_shift_; }

    // X_j for any integer j.
    exact_rat value(long j) const;

    // [X_lo, ..., X_hi]; rejects lo > hi.
    std::vector<exact_rat> values(long lo, long hi) const;

private:
    void extend_locked(long lo, long hi) const;
    exact_rat& at(long j) const { return cache_[static_cast<size_t>(j - base_)]; }
    exact_rat forward_value(long j) const;   // from the window below j
    exact_rat backward_value(long j) const;  // from the window above j

    std::vector<recurrence_tap> taps_;
    long max_shift_;
    mutable long base_;
    mutable std::vector<exact_rat> cache_;
    mutable std::mutex mu_;
};

// The order-6 recurrence satisfied by the squared terms T_n^2 of the
// sequence given by spec:
//   X_j = 2 X_{j-1} + 3 X_{j-2} + 6 X_{j-3} - X_{j-4} - X_{j-6},
// seeded with X_{-6}..X_{-1} = T_{-6}^2..T_{-1}^2.
linear_recurrence squared_term_recurrence(const sequence_spec& spec);

// The defining order-3 recurrence of the sequence itself, seeded with
// X_{-3}..X_{-1} = T_{-3}..T_{-1}.
linear_recurrence term_recurrence(const sequence_spec& spec);

}  // namespace trib
