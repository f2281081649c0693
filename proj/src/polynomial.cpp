#include "trib/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "trib/errors.hpp"

namespace trib {

polynomial::polynomial(std::vector<exact_rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

polynomial::polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

polynomial::polynomial(std::initializer_list<exact_rat> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
}

void polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int polynomial::degree() const {
    return coeffs_.empty() ? zero_degree : static_cast<int>(coeffs_.size()) - 1;
}

const exact_rat& polynomial::coeff(size_t i) const {
    static const exact_rat zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

exact_rat polynomial::eval(const exact_rat& x) const {
    exact_rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

polynomial polynomial::operator+(const polynomial& rhs) const {
    std::vector<exact_rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return polynomial(std::move(out));
}

polynomial polynomial::operator-(const polynomial& rhs) const {
    std::vector<exact_rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return polynomial(std::move(out));
}

polynomial polynomial::operator*(const polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<exact_rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return polynomial(std::move(out));
}

polynomial polynomial::operator-() const {
    std::vector<exact_rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return polynomial(std::move(out));
}

polynomial polynomial::shifted(unsigned k) const {
    if (is_zero()) return {};
    std::vector<exact_rat> out(coeffs_.size() + k);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return polynomial(std::move(out));
}

polynomial operator*(const exact_rat& scalar, const polynomial& p) {
    std::vector<exact_rat> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = scalar * p.coeffs()[i];
    return polynomial(std::move(out));
}

rational_function::rational_function() : num(), den({1}) {}

rational_function::rational_function(polynomial num_, polynomial den_)
    : num(std::move(num_)), den(std::move(den_)) {
    if (den.is_zero()) throw std::invalid_argument("rational function with denominator 0");
}

bool rational_function::equals(const rational_function& rhs) const {
    return num * rhs.den == rhs.num * den;
}

std::vector<exact_rat> series_coefficients(const rational_function& rf, size_t count) {
    if (count == 0) throw std::invalid_argument("series_coefficients: count must be >= 1");
    const exact_rat& d0 = rf.den.coeff(0);
    if (d0 == 0)
        throw non_unit_constant_term(
            "series expansion needs a nonzero denominator constant term");
    // Scale to unit constant term, then long-divide:
    //   c_n = num_n - sum_{i=1}^{n} den_i c_{n-i}.
    const exact_rat inv = 1 / d0;
    std::vector<exact_rat> out(count);
    for (size_t n = 0; n < count; ++n) {
        exact_rat c = rf.num.coeff(n) * inv;
        const size_t max_i = std::min(n, static_cast<size_t>(rf.den.coeffs().size() - 1));
        for (size_t i = 1; i <= max_i; ++i) c -= rf.den.coeff(i) * inv * out[n - i];
        out[n] = std::move(c);
    }
    return out;
}

namespace {

// Durand-Kerner simultaneous root iteration; plenty for the small
// denominators seen here.
std::vector<std::complex<double>> polynomial_roots(const polynomial& p) {
    const int deg = p.degree();
    std::vector<std::complex<double>> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i)
        c[static_cast<size_t>(i)] = p.coeff(static_cast<size_t>(i)).get_d();
    const std::complex<double> lead = c.back();
    for (auto& v : c) v /= lead;

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    std::vector<std::complex<double>> roots(static_cast<size_t>(deg));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1;
    for (auto& r : roots) {
        w *= seed;
        r = w;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (size_t i = 0; i < roots.size(); ++i) {
            std::complex<double> denom = 1;
            for (size_t j = 0; j < roots.size(); ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return roots;
}

}  // namespace

double convergence_radius_estimate(const rational_function& rf) {
    if (rf.den.degree() < 1)
        throw std::invalid_argument("radius estimate needs a nonconstant denominator");
    double radius = std::numeric_limits<double>::infinity();
    for (const auto& root : polynomial_roots(rf.den))
        radius = std::min(radius, std::abs(root));
    return radius;
}

nlohmann::json to_json(const rational_function& rf) {
    auto coeffs = [](const polynomial& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
        return arr;
    };
    return {{"num", coeffs(rf.num)}, {"den", coeffs(rf.den)}};
}

rational_function rational_function_from_json(const nlohmann::json& j) {
    auto poly = [](const nlohmann::json& arr) {
        std::vector<exact_rat> coeffs;
        for (const auto& c : arr) coeffs.push_back(parse_rat(c.get<std::string>()));
        return polynomial(std::move(coeffs));
    };
    return rational_function(poly(j.at("num")), poly(j.at("den")));
}

}  // namespace trib
