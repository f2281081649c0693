#pragma once

#include <stdexcept>
#include <string>

namespace trib {

// Thrown when a closed-form denominator evaluates to zero at the given x.
struct denominator_zero : std::domain_error {
    explicit denominator_zero(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a Tribonacci-only sum variant is evaluated with another seed.
struct variant_spec_mismatch : std::domain_error {
    explicit variant_spec_mismatch(const std::string& what) : std::domain_error(what) {}
};

// Thrown by power-series expansion when the denominator has constant term 0.
struct non_unit_constant_term : std::domain_error {
    explicit non_unit_constant_term(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a sample matrix would have fewer rows than its contract requires.
struct insufficient_rows : std::invalid_argument {
    explicit insufficient_rows(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace trib
