#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trib/scalar.hpp"
#include "trib/seq.hpp"

namespace trib {

// coeff * T_{r-offset}^power
struct power_term {
    long offset;
    exact_int coeff;
    bool operator==(const power_term&) const = default;
};

// coeff * T_{r-a} * T_{r-b}
struct cross_term {
    long a;
    long b;
    exact_int coeff;
    bool operator==(const cross_term&) const = default;
};

// An identity in "everything on one side = 0" normal form:
//   sum_i terms[i].coeff * T_{r-offset_i}^power
//     + sum_j cross[j].coeff * T_{r-a_j} * T_{r-b_j}  =  0   for all r.
struct identity_template {
    std::string id;
    unsigned power = 2;
    std::vector<power_term> terms;
    std::vector<cross_term> cross_terms;
    std::string provenance;  // empty for builtins, "discovered" for kernel finds

    bool operator==(const identity_template&) const = default;
};

// Throws std::invalid_argument on an empty template or duplicate offsets
// within one term list.
void validate(const identity_template& t);

// The catalog: square identities S1-S5, cross-product identities P1-P4,
// and the cube identity C1.
const std::vector<identity_template>& builtin_identities();

// nullptr when the id is unknown.
const identity_template* find_identity(std::string_view id);

// Exact left-hand-side value at index r; zero certifies the identity there.
exact_int residual(const identity_template& t, term_cache& cache, long r);
exact_int residual(const identity_template& t, const sequence_spec& spec, long r);

struct identity_failure {
    long r;
    exact_int residual;
};

struct identity_report {
    std::string id;
    sequence_spec spec;
    long r_lo = 0;
    long r_hi = 0;
    std::vector<identity_failure> failures;
    bool pass = true;  // pass <=> failures.empty()
};

// Residuals for every r in [r_lo, r_hi]; rejects r_lo > r_hi.
identity_report verify_range(const identity_template& t, term_cache& cache, long r_lo,
                             long r_hi);
identity_report verify_range(const identity_template& t, const sequence_spec& spec,
                             long r_lo, long r_hi);

// JSON schema: {id, power, terms:[{offset, coeff}], cross_terms:[{a, b, coeff}]}
// with coefficients as decimal strings; cross_terms omitted when empty and a
// provenance field added for discovered templates.
nlohmann::json to_json(const identity_template& t);
identity_template template_from_json(const nlohmann::json& j);
nlohmann::json to_json(const identity_report& report);

}  // namespace trib
