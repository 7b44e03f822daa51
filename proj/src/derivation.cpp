#include "deriv/derivation.hpp"

#include <algorithm>
#include <stdexcept>

#include "deriv/linalg.hpp"

namespace deriv {

Derivation::Derivation(RingContextPtr ctx, std::vector<MultiPoly> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != ctx_->size())
        throw std::invalid_argument("derivation must be defined on every generator");
    for (const auto& img : images_)
        if (!same_context(img.context(), ctx_))
            throw std::invalid_argument("derivation image over a foreign ring");
}

MultiPoly Derivation::apply(const MultiPoly& p) const {
    if (!same_context(p.context(), ctx_))
        throw std::invalid_argument("apply: polynomial over a foreign ring");
    MultiPoly out(ctx_);
    for (int v = 0; v < ctx_->size(); ++v) {
        if (!p.depends_on(v)) continue;
        out += images_[static_cast<size_t>(v)] * p.partial_derivative(v);
    }
    return out;
}

Automorphism::Automorphism(RingContextPtr ctx, std::vector<MultiPoly> forward,
                           std::vector<MultiPoly> inverse)
    : ctx_(std::move(ctx)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (static_cast<int>(forward_.size()) != ctx_->size() ||
        static_cast<int>(inverse_.size()) != ctx_->size())
        throw std::invalid_argument("automorphism must map every generator");
    for (int v = 0; v < ctx_->size(); ++v) {
        MultiPoly gen = MultiPoly::var(ctx_, v);
        if (forward_[static_cast<size_t>(v)].substitute(inverse_) != gen ||
            inverse_[static_cast<size_t>(v)].substitute(forward_) != gen)
            throw std::invalid_argument("supplied inverse does not invert the substitution");
    }
}

Automorphism Automorphism::identity(const RingContextPtr& ctx) {
    std::vector<MultiPoly> gens;
    for (int v = 0; v < ctx->size(); ++v) gens.push_back(MultiPoly::var(ctx, v));
    return Automorphism(ctx, gens, gens);
}

std::optional<Automorphism> Automorphism::affine(const RingContextPtr& ctx,
                                                 const Rational& alpha,
                                                 const std::vector<std::vector<Rational>>& c,
                                                 const std::vector<UniPoly>& e) {
    const int m = ctx->size() - 1;
    if (static_cast<int>(c.size()) != m || static_cast<int>(e.size()) != m)
        throw std::invalid_argument("affine automorphism: shape mismatch");

    std::vector<MultiPoly> fwd;
    fwd.push_back(MultiPoly::var(ctx, 0) + MultiPoly::constant(ctx, alpha));
    for (int i = 0; i < m; ++i) {
        MultiPoly img = MultiPoly::from_unipoly(ctx, e[static_cast<size_t>(i)]);
        for (int j = 0; j < m; ++j) {
            const Rational& cij = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (cij != 0) img += cij * MultiPoly::var(ctx, j + 1);
        }
        fwd.push_back(std::move(img));
    }

    auto cinv = invert(c);
    if (!cinv) return std::nullopt;

    // sigma(X) = X - alpha; sigma(Y_i) = sum_j (c^-1)_ij (Y_j - e_j(X - alpha)).
    std::vector<MultiPoly> inv;
    inv.push_back(MultiPoly::var(ctx, 0) - MultiPoly::constant(ctx, alpha));
    for (int i = 0; i < m; ++i) {
        MultiPoly img(ctx);
        for (int j = 0; j < m; ++j) {
            const Rational& w = (*cinv)[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (w == 0) continue;
            MultiPoly shifted_e =
                MultiPoly::from_unipoly(ctx, e[static_cast<size_t>(j)].shifted(-alpha));
            img += w * (MultiPoly::var(ctx, j + 1) - shifted_e);
        }
        inv.push_back(std::move(img));
    }
    return Automorphism(ctx, std::move(fwd), std::move(inv));
}

Automorphism Automorphism::inverted() const { return Automorphism(ctx_, inverse_, forward_); }

bool Automorphism::is_identity() const {
    for (int v = 0; v < ctx_->size(); ++v)
        if (forward_[static_cast<size_t>(v)] != MultiPoly::var(ctx_, v)) return false;
    return true;
}

Automorphism compose(const Automorphism& rho, const Automorphism& tau) {
    if (!same_context(rho.context(), tau.context()))
        throw std::invalid_argument("compose: mismatched ring contexts");
    std::vector<MultiPoly> fwd, inv;
    for (int v = 0; v < rho.context()->size(); ++v) {
        fwd.push_back(tau.forward()[static_cast<size_t>(v)].substitute(rho.forward()));
        inv.push_back(rho.inverse()[static_cast<size_t>(v)].substitute(tau.inverse()));
    }
    return Automorphism(rho.context(), std::move(fwd), std::move(inv));
}

Derivation conjugate(const Automorphism& rho, const Derivation& d) {
    if (!same_context(rho.context(), d.context()))
        throw std::invalid_argument("conjugate: mismatched ring contexts");
    std::vector<MultiPoly> images;
    for (int v = 0; v < d.context()->size(); ++v) {
        MultiPoly pre = rho.inverse()[static_cast<size_t>(v)];
        images.push_back(rho.apply(d.apply(pre)));
    }
    return Derivation(d.context(), std::move(images));
}

bool commutes(const Automorphism& rho, const Derivation& d) {
    if (!same_context(rho.context(), d.context()))
        throw std::invalid_argument("commutes: mismatched ring contexts");
    for (int v = 0; v < d.context()->size(); ++v) {
        // rho(d(v)) vs d(rho(v)); agreement on generators pins the derivation.
        if (rho.apply(d.image(v)) != d.apply(rho.forward()[static_cast<size_t>(v)]))
            return false;
    }
    return true;
}

namespace {

// Canonical order on K[X]: by degree, then coefficients from X^0 up.
bool unipoly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= std::max(a.degree(), 0); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace

std::optional<ShamsuddinForm> recognize_shamsuddin(const Derivation& d) {
    const RingContextPtr& ctx = d.context();
    if (d.image(0) != MultiPoly::constant(ctx, Rational(1))) return std::nullopt;

    // Per-variable (a_i, b_i) pairs, then group by equal a.
    std::vector<std::pair<UniPoly, UniPoly>> parts;
    for (VarId v = 1; v < ctx->size(); ++v) {
        const MultiPoly& img = d.image(v);
        if (img.degree_in(v) > 1) return std::nullopt;
        MultiPoly a_part = img.coeff_in(v, 1);
        MultiPoly b_part = img.coeff_in(v, 0);
        for (VarId w = 1; w < ctx->size(); ++w)
            if (a_part.depends_on(w) || b_part.depends_on(w)) return std::nullopt;
        auto a = a_part.to_unipoly();
        auto b = b_part.to_unipoly();
        if (!a || !b) return std::nullopt;
        parts.emplace_back(std::move(*a), std::move(*b));
    }

    ShamsuddinForm form;
    form.ctx = ctx;
    for (VarId v = 1; v < ctx->size(); ++v) {
        auto& [a, b] = parts[static_cast<size_t>(v - 1)];
        auto it = std::find_if(form.components.begin(), form.components.end(),
                               [&](const ShamsuddinComponent& comp) { return comp.a == a; });
        if (it == form.components.end()) {
            form.components.push_back({a, {b}, {v}});
        } else {
            it->bs.push_back(b);
            it->vars.push_back(v);
        }
    }
    std::stable_sort(form.components.begin(), form.components.end(),
                     [](const ShamsuddinComponent& x, const ShamsuddinComponent& y) {
                         return unipoly_less(x.a, y.a);
                     });
    return form;
}

Derivation shamsuddin_derivation(const ShamsuddinForm& form) {
    const RingContextPtr& ctx = form.ctx;
    std::vector<MultiPoly> images(static_cast<size_t>(ctx->size()), MultiPoly(ctx));
    images[0] = MultiPoly::constant(ctx, Rational(1));
    for (const auto& comp : form.components) {
        for (size_t j = 0; j < comp.vars.size(); ++j) {
            VarId v = comp.vars[j];
            images[static_cast<size_t>(v)] =
                MultiPoly::from_unipoly(ctx, comp.a) * MultiPoly::var(ctx, v) +
                MultiPoly::from_unipoly(ctx, comp.bs[j]);
        }
    }
    return Derivation(ctx, std::move(images));
}

std::optional<IdealWitness> ideal_stable(const Derivation& d, const MultiPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("ideal_stable: zero generator");
    MultiPoly dg = d.apply(g);
    auto cof = multi_exact_div(dg, g);
    if (!cof) return std::nullopt;
    return IdealWitness{g, std::move(*cof)};
}

}  // namespace deriv
