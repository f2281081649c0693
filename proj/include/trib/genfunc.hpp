#pragma once

#include <array>

#include "trib/polynomial.hpp"
#include "trib/recurrence.hpp"
#include "trib/seq.hpp"

namespace trib {

// Closes the formal series sum_{j>=0} x^j X_j of a recurrent sequence into a
// rational function: numerator sum_m f_m * sum_{j=1}^{c_m} X_{-j} x^{c_m - j},
// denominator 1 - sum_m f_m x^{c_m}.
rational_function generating_function(const linear_recurrence& rec);

// The generating function of the squared terms T_j^2 for the given seed:
//   numerator  (2+3x+6x^2-x^3-x^5) T_{-1}^2 + (3+6x-x^2-x^4) T_{-2}^2
//            + (6-x-x^3) T_{-3}^2 - (1+x^2) T_{-4}^2 - x T_{-5}^2 - T_{-6}^2
//   denominator (1-3x-x^2-x^3)(1+x+x^2-x^3)
rational_function squares_generating_function(const sequence_spec& spec);

// The two cubic factors and their product, shared by the weighted square
// sum and the generating function of squares.
polynomial square_sum_denominator_factor_a();  // 1 - 3x - x^2 - x^3
polynomial square_sum_denominator_factor_b();  // 1 + x + x^2 - x^3
polynomial square_sum_denominator();           // their product

// Boundary weights w_1..w_6: w_i multiplies (T_{-i}^2 - x^{k+1} T_{k-i+1}^2)
// in the weighted square-sum closed form, and T_{-i}^2 alone in the
// generating-function numerator.
const std::array<polynomial, 6>& squares_boundary_weights();

}  // namespace trib
