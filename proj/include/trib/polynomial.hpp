#pragma once

#include <initializer_list>
#include <limits>
#include <vector>

#include <json.hpp>

#include "trib/scalar.hpp"

namespace trib {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree, trailing zeros trimmed.
class polynomial {
public:
    // Degree reported for the zero polynomial (stands in for -infinity).
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    polynomial() = default;  // zero
    polynomial(std::vector<exact_rat> coeffs);
    polynomial(std::initializer_list<long> coeffs);
    polynomial(std::initializer_list<exact_rat> coeffs);

    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^i, zero beyond the degree.
    const exact_rat& coeff(size_t i) const;
    const std::vector<exact_rat>& coeffs() const { return coeffs_; }

    exact_rat eval(const exact_rat& x) const;

    polynomial operator+(const polynomial& rhs) const;
    polynomial operator-(const polynomial& rhs) const;
    polynomial operator*(const polynomial& rhs) const;
    polynomial operator-() const;
    bool operator==(const polynomial&) const = default;

    // this * x^k
    polynomial shifted(unsigned k) const;

private:
    void trim();
    std::vector<exact_rat> coeffs_;
};

polynomial operator*(const exact_rat& scalar, const polynomial& p);

// Numerator / denominator pair. The stored form need not be reduced;
// equality is decided by cross-multiplication. The denominator must be a
// nonzero polynomial.
struct rational_function {
    polynomial num;
    polynomial den;

    rational_function();  // 0 / 1
    rational_function(polynomial num, polynomial den);

    bool equals(const rational_function& rhs) const;  // num*rhs.den == rhs.num*den
};

// First `count` Taylor coefficients at 0 by power-series long division.
// The denominator is scaled to unit constant term; throws
// non_unit_constant_term when the constant term is zero.
std::vector<exact_rat> series_coefficients(const rational_function& rf, size_t count);

// Numeric estimate of the series' radius of convergence: the smallest
// modulus among the denominator's complex roots. Requires a nonconstant
// denominator. The only floating-point computation in the library.
double convergence_radius_estimate(const rational_function& rf);

// {"num": [...], "den": [...]} with coefficients as "p/q" strings.
nlohmann::json to_json(const rational_function& rf);
rational_function rational_function_from_json(const nlohmann::json& j);

}  // namespace trib
