#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trib/recurrence.hpp"
#include "trib/scalar.hpp"
#include "trib/seq.hpp"

namespace trib {

// The fourteen closed-form sums. GEN_* and the weighted J/J2 sums accept any
// seed; the rest bake in constants valid only for the Tribonacci seed (0,1,1).
enum class sum_variant {
    gen_all,    // sum_{j=0}^k T_j^2
    gen_alt,    // sum_{j=0}^k (-1)^j T_j^2
    trib_all,   // sum_{j=0}^k T_j^2, Tribonacci seed
    trib_alt,   // sum_{j=0}^k (-1)^j T_j^2, Tribonacci seed
    even,       // sum_{j=0}^k T_{2j}^2
    odd,        // sum_{j=1}^k T_{2j-1}^2
    alt_even,   // sum_{j=0}^k (-1)^j T_{2j}^2
    alt_odd,    // sum_{j=1}^k (-1)^{j-1} T_{2j-1}^2
    quad_0,     // sum_{j=0}^k T_{4j}^2
    quad_2,     // sum_{j=1}^k T_{4j-2}^2
    quad_3,     // sum_{j=1}^k T_{4j-3}^2
    quad_1,     // sum_{j=0}^k T_{4j-1}^2
    j_weight,   // sum_{j=0}^k j T_j^2
    j2_weight,  // sum_{j=0}^k j^2 T_j^2
};

constexpr std::array<sum_variant, 14> all_sum_variants = {
    sum_variant::gen_all,  sum_variant::gen_alt,  sum_variant::trib_all,
    sum_variant::trib_alt, sum_variant::even,     sum_variant::odd,
    sum_variant::alt_even, sum_variant::alt_odd,  sum_variant::quad_0,
    sum_variant::quad_2,   sum_variant::quad_3,   sum_variant::quad_1,
    sum_variant::j_weight, sum_variant::j2_weight};

std::string_view to_string(sum_variant v);                      // "GEN_ALL", ...
std::optional<sum_variant> sum_variant_from_string(std::string_view s);

// First summation index of the variant (0 or 1); sums below it are empty.
long sum_lower_bound(sum_variant v);

// Variants whose closed forms hold only for the seed (0, 1, 1).
bool tribonacci_only(sum_variant v);

// Boundary-term closed form for sum_{j=0}^k x^j X_j of any recurrent
// sequence:
//   [ sum_m x^{c_m} f_m ( sum_{j=1}^{c_m} x^{-j} X_{-j}
//                         - sum_{j=k-c_m+1}^{k} x^j X_j ) ]
//   / ( 1 - sum_m x^{c_m} f_m ).
// x = 0 is handled as a special case returning X_0; throws denominator_zero
// when the denominator vanishes.
exact_rat weighted_partial_sum(const linear_recurrence& rec, const exact_rat& x, long k);

// Closed form for sum_{j=0}^k x^j T_j^2 with denominator
// (1-3x-x^2-x^3)(1+x+x^2-x^3); x = 0 returns T_0^2. Throws denominator_zero
// (never reachable for rational x: neither cubic has a rational root).
exact_rat weighted_square_sum(const sequence_spec& spec, const exact_rat& x, long k);

// The closed form of one variant, divided through by its leading 8
// or 16 so the return value is the sum itself. Throws variant_spec_mismatch
// for a Tribonacci-only variant with another seed. k below the variant's
// lower bound gives the empty sum 0.
exact_rat special_sum(const sequence_spec& spec, sum_variant v, long k);

// Brute-force references: literal term-by-term summation, no closed form.
exact_rat direct_sum_oracle(const sequence_spec& spec, sum_variant v, long k);
exact_rat direct_weighted_square_sum(const sequence_spec& spec, const exact_rat& x,
                                     long k);
exact_rat direct_weighted_partial_sum(const linear_recurrence& rec, const exact_rat& x,
                                      long k);

struct sum_report {
    sum_variant variant;
    long k = 0;
    exact_rat closed;
    exact_rat oracle;
    bool equal = false;
};

// Runs closed form and oracle, reports exact equality.
sum_report compare(const sequence_spec& spec, sum_variant v, long k);

nlohmann::json to_json(const sum_report& report);
constexpr std::string_view sum_report_csv_header = "variant,k,closed,oracle,equal";
std::string to_csv_row(const sum_report& report);

}  // namespace trib
