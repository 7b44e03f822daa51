#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "deriv/unipoly.hpp"

namespace deriv {

// Index into a RingContext's variable list. Index 0 is reserved for X.
using VarId = int;

// The ambient polynomial ring K[X; Y-vars]: an ordered list of unique
// variable names. X is always declared first.
class RingContext {
public:
    explicit RingContext(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(VarId v) const { return names_.at(static_cast<size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VarId> find(std::string_view name) const;

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using RingContextPtr = std::shared_ptr<const RingContext>;

RingContextPtr make_context(std::vector<std::string> names);

bool same_context(const RingContextPtr& a, const RingContextPtr& b);

// Exponent vector, one entry per context variable.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial over Q. Terms map monomials to nonzero
// coefficients; equal term maps <=> equal polynomials.
class MultiPoly {
public:
    explicit MultiPoly(RingContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly constant(RingContextPtr ctx, Rational c);
    static MultiPoly var(RingContextPtr ctx, VarId v, int exponent = 1);
    // Embed p(X) as a multivariate polynomial in X (variable 0).
    static MultiPoly from_unipoly(RingContextPtr ctx, const UniPoly& p, VarId v = 0);

    const RingContextPtr& context() const { return ctx_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    bool depends_on(VarId v) const;
    int degree_in(VarId v) const;  // kNegInfDegree for the zero polynomial
    int total_degree_in_range(VarId first, VarId last) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    MultiPoly pow(int e) const;
    MultiPoly partial_derivative(VarId v) const;

    // Coefficient of v^k, a polynomial in the remaining variables.
    MultiPoly coeff_in(VarId v, int k) const;

    // The polynomial as a dense list of coefficients in v: index k holds
    // coeff_in(v, k). Size degree_in(v)+1, empty for zero.
    std::vector<MultiPoly> as_poly_in(VarId v) const;

    // Simultaneous substitution; every variable occurring in *this must
    // have an image. Images share one target context.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Exact extraction to K[X] (or the given variable); nullopt when the
    // polynomial involves any other variable.
    std::optional<UniPoly> to_unipoly(VarId v = 0) const;

    void add_term(Monomial m, Rational c);

private:
    void check_same_ring(const MultiPoly& rhs) const;
    RingContextPtr ctx_;
    std::map<Monomial, Rational> terms_;
};

// Exact division p / g by single-divisor reduction (lex leading terms).
// nullopt when g does not divide p. Throws on g = 0.
std::optional<MultiPoly> multi_exact_div(const MultiPoly& p, const MultiPoly& g);

}  // namespace deriv
