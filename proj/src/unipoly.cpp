#include "deriv/unipoly.hpp"

#include <algorithm>

namespace deriv {

namespace {
const Rational kZero{0};
}

UniPoly::UniPoly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly UniPoly::monomial(int degree, Rational coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (coeff == 0) return UniPoly{};
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coeff);
    UniPoly p;
    p.coeffs_ = std::move(c);
    return p;
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading_coeff() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return UniPoly{};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return UniPoly{std::move(out)};
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    if (c == 0) return UniPoly{};
    UniPoly out = p;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(i) * coeffs_[i];
    return UniPoly{std::move(out)};
}

UniPoly UniPoly::shifted(const Rational& shift) const {
    // Horner on X + shift.
    UniPoly base{Rational(0), Rational(1)};
    base += UniPoly(shift);
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * base;
        acc += UniPoly(*it);
    }
    return acc;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& b, const UniPoly& a) {
    if (a.is_zero()) throw std::domain_error("uni_divmod: division by the zero polynomial");
    UniPoly r = b;
    UniPoly q;
    const int da = a.degree();
    const Rational& lead = a.leading_coeff();
    while (!r.is_zero() && r.degree() >= da) {
        Rational c = r.leading_coeff() / lead;
        int shift = r.degree() - da;
        UniPoly t = UniPoly::monomial(shift, c);
        q += t;
        r -= t * a;
    }
    return {std::move(q), std::move(r)};
}

std::optional<UniPoly> uni_exact_div(const UniPoly& b, const UniPoly& a) {
    auto [q, r] = uni_divmod(b, a);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace deriv
