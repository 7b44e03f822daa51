#pragma once

#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "deriv/rational.hpp"

namespace deriv {

// degree(0) sentinel, ordered below every attainable degree.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// Dense univariate polynomial over Q, coefficient i belongs to X^i.
// Canonical: no trailing zero coefficients; the zero polynomial stores
// no coefficients at all.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational constant);
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly monomial(int degree, Rational coeff = Rational(1));
    static UniPoly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const {
        return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1;
    }

    // Coefficient of X^i; zero outside the stored range.
    const Rational& coeff(int i) const;
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

    UniPoly derivative() const;

    // p(X + shift), exact.
    UniPoly shifted(const Rational& shift) const;

    Rational eval(const Rational& x) const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Euclidean division b = a*q + r with deg r < deg a. Throws on a = 0.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& b, const UniPoly& a);

// Exact quotient b / a, or nullopt when a does not divide b.
std::optional<UniPoly> uni_exact_div(const UniPoly& b, const UniPoly& a);

}  // namespace deriv
