#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "deriv/multipoly.hpp"

namespace deriv {

// A K-derivation of the ring, given by its images on the generators and
// extended by linearity and the Leibniz rule.
class Derivation {
public:
    Derivation(RingContextPtr ctx, std::vector<MultiPoly> images);

    const RingContextPtr& context() const { return ctx_; }
    const MultiPoly& image(VarId v) const { return images_.at(static_cast<size_t>(v)); }
    const std::vector<MultiPoly>& images() const { return images_; }

    MultiPoly apply(const MultiPoly& p) const;

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return same_context(a.ctx_, b.ctx_) && a.images_ == b.images_;
    }

private:
    RingContextPtr ctx_;
    std::vector<MultiPoly> images_;
};

// A ring automorphism given by generator substitution images together
// with the images of its inverse; both directions are verified to
// compose to the identity at construction.
class Automorphism {
public:
    Automorphism(RingContextPtr ctx, std::vector<MultiPoly> forward,
                 std::vector<MultiPoly> inverse);

    static Automorphism identity(const RingContextPtr& ctx);

    // rho(X) = X + alpha, rho(Y_i) = sum_j c_ij Y_j + e_i(X) with an
    // invertible constant matrix c; the inverse is computed exactly.
    // nullopt when c is singular.
    static std::optional<Automorphism> affine(const RingContextPtr& ctx, const Rational& alpha,
                                              const std::vector<std::vector<Rational>>& c,
                                              const std::vector<UniPoly>& e);

    const RingContextPtr& context() const { return ctx_; }
    const std::vector<MultiPoly>& forward() const { return forward_; }
    const std::vector<MultiPoly>& inverse() const { return inverse_; }

    // Apply as a ring map: substitute every variable by its image.
    MultiPoly apply(const MultiPoly& p) const { return p.substitute(forward_); }
    MultiPoly apply_inverse(const MultiPoly& p) const { return p.substitute(inverse_); }

    Automorphism inverted() const;

    bool is_identity() const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return same_context(a.ctx_, b.ctx_) && a.forward_ == b.forward_;
    }

private:
    RingContextPtr ctx_;
    std::vector<MultiPoly> forward_;
    std::vector<MultiPoly> inverse_;
};

// (rho . tau)(v) = rho(tau(v)).
Automorphism compose(const Automorphism& rho, const Automorphism& tau);

// v -> rho(d(rho^{-1}(v))).
Derivation conjugate(const Automorphism& rho, const Derivation& d);

// True iff rho d rho^{-1} = d, checked on generators.
bool commutes(const Automorphism& rho, const Derivation& d);

// One grouped component of a Shamsuddin derivation in canonical form:
// d(Y_{i,j}) = a Y_{i,j} + b_j with a shared across the component.
struct ShamsuddinComponent {
    UniPoly a;
    std::vector<UniPoly> bs;
    std::vector<VarId> vars;  // parallel to bs
};

struct ShamsuddinForm {
    RingContextPtr ctx;
    std::vector<ShamsuddinComponent> components;
};

// Succeeds iff d(X)=1 and every d(Y_i) = a_i Y_i + b_i with a_i, b_i in
// K[X]; components grouped by equal a and ordered canonically.
std::optional<ShamsuddinForm> recognize_shamsuddin(const Derivation& d);

Derivation shamsuddin_derivation(const ShamsuddinForm& form);

struct IdealWitness {
    MultiPoly generator;
    MultiPoly cofactor;  // d(generator) = cofactor * generator
};

// Decides whether the principal ideal (g) is d-stable, i.e. g | d(g).
std::optional<IdealWitness> ideal_stable(const Derivation& d, const MultiPoly& g);

}  // namespace deriv
