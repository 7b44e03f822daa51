#include "deriv/isotropy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace deriv {

Derivation YDegreeDerivation::derivation() const {
    MultiPoly dy(ctx);
    for (size_t k = 0; k < h.size(); ++k)
        dy += MultiPoly::from_unipoly(ctx, h[k]) * MultiPoly::var(ctx, 1, static_cast<int>(k));
    return Derivation(ctx, {MultiPoly::constant(ctx, Rational(1)), std::move(dy)});
}

std::optional<YDegreeDerivation> YDegreeDerivation::from_derivation(const Derivation& d) {
    const RingContextPtr& ctx = d.context();
    if (ctx->size() != 2) return std::nullopt;
    if (d.image(0) != MultiPoly::constant(ctx, Rational(1))) return std::nullopt;
    int n = d.image(1).degree_in(1);
    if (n < 2) return std::nullopt;
    std::vector<UniPoly> h;
    for (int k = 0; k <= n; ++k) {
        auto hk = d.image(1).coeff_in(1, k).to_unipoly();
        if (!hk) return std::nullopt;
        h.push_back(std::move(*hk));
    }
    return YDegreeDerivation{ctx, std::move(h)};
}

std::vector<Rational> roots_of_unity_rational(int m) {
    if (m < 1) throw std::invalid_argument("roots of unity need m >= 1");
    if (m % 2 == 0) return {Rational(1), Rational(-1)};
    return {Rational(1)};
}

namespace {

bool automorphism_less(const Automorphism& a, const Automorphism& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    for (size_t v = 0; v < a.forward().size(); ++v) {
        const auto& ta = a.forward()[v].terms();
        const auto& tb = b.forward()[v].terms();
        if (ta != tb) return ta < tb;
    }
    return false;
}

}  // namespace

IsotropyResult isotropy_two_var(const YDegreeDerivation& yd) {
    const int n = yd.n();
    if (n < 2) throw UnsupportedClassError("Y-degree must be at least 2");
    if (yd.h.back().is_zero()) throw std::invalid_argument("leading coefficient h_n must be nonzero");

    Derivation d = yd.derivation();
    const UniPoly& hn = yd.h.back();
    const UniPoly& hn1 = yd.h[static_cast<size_t>(n) - 1];

    IsotropyResult result;
    result.kind = IsotropyResult::Kind::Finite;
    result.completeness = IsotropyResult::Completeness::Complete;

    for (const Rational& b1 : roots_of_unity_rational(n - 1)) {
        // The Y^{n-1} coefficient of the commutation identity forces
        // n h_n b_0 = (b_1 - 1) h_{n-1}; b_0 must be a polynomial.
        auto b0 = uni_exact_div((b1 - 1) * hn1, Rational(n) * hn);
        if (!b0) continue;
        auto rho = Automorphism::affine(yd.ctx, Rational(0), {{b1}}, {*b0});
        if (!rho || !commutes(*rho, d)) continue;

        // Constant-coefficient identity, a consequence of the full one:
        // sum_k h_k b_0^k + h_0 (1 - b_1) = b_0'.
        UniPoly lhs = (Rational(1) - b1) * yd.h[0];
        UniPoly pw{Rational(1)};
        for (int k = 1; k <= n; ++k) {
            pw = pw * *b0;
            lhs += yd.h[static_cast<size_t>(k)] * pw;
        }
        if (lhs != b0->derivative())
            throw std::logic_error("verified element violates the constant-term identity");
        result.elements.push_back(std::move(*rho));
    }
    std::sort(result.elements.begin(), result.elements.end(), automorphism_less);
    if (result.elements.empty() || !result.elements.front().is_identity())
        throw std::logic_error("two-variable isotropy must contain the identity");
    return result;
}

namespace {

std::string coeff_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

std::optional<Automorphism> AffineFamily::member(const Vector& params) const {
    if (alpha_free) {
        // One parameter: the translation X -> X + params[0].
        Rational a = params.empty() ? Rational(0) : params[0];
        return Automorphism::affine(ctx, a, {}, {});
    }
    if (params.size() != basis.size())
        throw std::invalid_argument("family member needs one value per free parameter");
    Vector u = particular;
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t t = 0; t < u.size(); ++t) u[t] += params[k] * basis[k][t];

    const size_t mm = static_cast<size_t>(num_y);
    std::vector<std::vector<Rational>> c(mm, std::vector<Rational>(mm));
    for (size_t i = 0; i < mm; ++i)
        for (size_t j = 0; j < mm; ++j) c[i][j] = u[i * mm + j];
    std::vector<UniPoly> e;
    const size_t width = static_cast<size_t>(deg_bound) + 1;
    for (size_t i = 0; i < mm; ++i) {
        std::vector<Rational> coeffs(u.begin() + static_cast<std::ptrdiff_t>(mm * mm + i * width),
                                     u.begin() + static_cast<std::ptrdiff_t>(mm * mm + (i + 1) * width));
        e.emplace_back(std::move(coeffs));
    }
    return Automorphism::affine(ctx, alpha, c, e);
}

IsotropyResult affine_isotropy_search(const Derivation& d, int deg_bound) {
    const RingContextPtr& ctx = d.context();
    const int m = ctx->size() - 1;
    if (d.image(0) != MultiPoly::constant(ctx, Rational(1)))
        throw UnsupportedClassError("affine search requires d(X) = 1");
    if (deg_bound < 0) throw std::invalid_argument("negative degree bound");

    IsotropyResult result;
    result.completeness = IsotropyResult::Completeness::AnsatzOnly;

    if (m == 0) {
        AffineFamily fam;
        fam.ctx = ctx;
        fam.alpha_free = true;
        fam.equations.push_back("alpha free");
        result.kind = IsotropyResult::Kind::Affine;
        result.family = std::move(fam);
        return result;
    }

    // Decompose each d(Y_i) = p0_i(X) + sum_j pj_i(X) Y_j; inputs of
    // higher Y-degree make the constraint system nonlinear.
    std::vector<MultiPoly> p0;
    std::vector<std::vector<MultiPoly>> pj;
    for (int i = 1; i <= m; ++i) {
        const MultiPoly& img = d.image(i);
        if (img.total_degree_in_range(1, m) > 1)
            throw UnsupportedClassError("d(" + ctx->name(i) + ") is not affine in the Y-variables");
        MultiPoly rest = img;
        std::vector<MultiPoly> row;
        for (int j = 1; j <= m; ++j) {
            MultiPoly cj = img.coeff_in(j, 1);
            row.push_back(cj);
            rest -= cj * MultiPoly::var(ctx, j);
        }
        pj.push_back(std::move(row));
        p0.push_back(std::move(rest));
    }

    // Shifts X -> X + alpha with alpha != 0 are only compatible when the
    // Y-coefficients are X-constant, and then the search restricts to
    // alpha = 0 (the family is ansatz-only regardless).
    const Rational alpha(0);

    const int width = deg_bound + 1;
    const int nunk = m * m + m * width;
    auto cidx = [m](int i, int j) { return (i - 1) * m + (j - 1); };
    auto eidx = [m, width](int i, int s) { return m * m + (i - 1) * width + s; };

    std::vector<std::string> labels(static_cast<size_t>(nunk));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            labels[static_cast<size_t>(cidx(i, j))] =
                "c[" + ctx->name(i) + "][" + ctx->name(j) + "]";
    for (int i = 1; i <= m; ++i)
        for (int s = 0; s < width; ++s)
            labels[static_cast<size_t>(eidx(i, s))] =
                "e[" + ctx->name(i) + "]." + std::to_string(s);

    // Commutation residue for Y_i, linear in the unknowns:
    // residue_i = const_i + sum_t unknown_t * coef_{i,t}.
    Matrix rows;
    Vector rhs;
    for (int i = 1; i <= m; ++i) {
        std::vector<MultiPoly> coef(static_cast<size_t>(nunk), MultiPoly(ctx));
        MultiPoly cst = p0[static_cast<size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            const MultiPoly& pji = pj[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (pji.is_zero()) continue;
            for (int k = 1; k <= m; ++k)
                coef[static_cast<size_t>(cidx(j, k))] += pji * MultiPoly::var(ctx, k);
            for (int s = 0; s < width; ++s)
                coef[static_cast<size_t>(eidx(j, s))] += pji * MultiPoly::var(ctx, 0, s);
        }
        for (int j = 1; j <= m; ++j) coef[static_cast<size_t>(cidx(i, j))] -= d.image(j);
        for (int s = 1; s < width; ++s)
            coef[static_cast<size_t>(eidx(i, s))] -=
                Rational(s) * MultiPoly::var(ctx, 0, s - 1);

        // One linear equation per monomial of the residue.
        std::set<Monomial> monomials;
        for (const auto& [mono, c] : cst.terms()) monomials.insert(mono);
        for (const auto& cp : coef)
            for (const auto& [mono, c] : cp.terms()) monomials.insert(mono);
        for (const auto& mono : monomials) {
            Vector row(static_cast<size_t>(nunk), Rational(0));
            for (int t = 0; t < nunk; ++t) {
                auto it = coef[static_cast<size_t>(t)].terms().find(mono);
                if (it != coef[static_cast<size_t>(t)].terms().end())
                    row[static_cast<size_t>(t)] = it->second;
            }
            Rational b(0);
            auto it = cst.terms().find(mono);
            if (it != cst.terms().end()) b = -it->second;
            rows.push_back(std::move(row));
            rhs.push_back(std::move(b));
        }
    }

    auto sol = solve_linear(rows, rhs);
    if (!sol) throw std::logic_error("affine ansatz system inconsistent; identity must solve it");

    // Pretty constraints from the pivot rows.
    Matrix aug = rows;
    for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
    std::vector<int> pivots = rref(aug);
    std::vector<std::string> equations;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::ostringstream os;
        bool first = true;
        for (int t = 0; t < nunk; ++t) {
            const Rational& c = aug[r][static_cast<size_t>(t)];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rational mag = abs(c);
            if (mag != 1) os << coeff_str(mag) << "*";
            os << labels[static_cast<size_t>(t)];
            first = false;
        }
        os << " = " << coeff_str(aug[r][static_cast<size_t>(nunk)]);
        equations.push_back(os.str());
    }

    AffineFamily fam;
    fam.ctx = ctx;
    fam.num_y = m;
    fam.deg_bound = deg_bound;
    fam.alpha = alpha;
    fam.unknowns = std::move(labels);
    fam.particular = std::move(sol->particular);
    fam.basis = std::move(sol->nullspace);
    fam.equations = std::move(equations);

    if (fam.basis.empty()) {
        auto only = fam.member({});
        if (!only || !commutes(*only, d))
            throw std::logic_error("unique ansatz solution failed verification");
        result.kind = IsotropyResult::Kind::Finite;
        result.elements.push_back(std::move(*only));
        return result;
    }
    result.kind = IsotropyResult::Kind::Affine;
    result.family = std::move(fam);
    return result;
}

IsotropyResult isotropy_shamsuddin(const ShamsuddinForm& form, int deg_bound) {
    SimplicityVerdict verdict = shamsuddin_simple(form);
    if (verdict.simple) {
        IsotropyResult result;
        result.kind = IsotropyResult::Kind::Finite;
        result.completeness = IsotropyResult::Completeness::Complete;
        result.elements.push_back(Automorphism::identity(form.ctx));
        return result;
    }
    if (deg_bound < 0) {
        int top = 0;
        for (const auto& comp : form.components) {
            top = std::max(top, comp.a.degree());
            for (const auto& b : comp.bs) top = std::max(top, b.degree());
        }
        deg_bound = top + 2;
    }
    return affine_isotropy_search(shamsuddin_derivation(form), deg_bound);
}

GroupCertificate group_table(const IsotropyResult& result) {
    if (result.kind != IsotropyResult::Kind::Finite)
        throw std::invalid_argument("group table needs a finite result");
    const auto& els = result.elements;
    auto index_of = [&](const Automorphism& x) {
        for (size_t i = 0; i < els.size(); ++i)
            if (els[i] == x) return static_cast<int>(i);
        return -1;
    };

    bool has_identity = false;
    for (const auto& e : els) has_identity = has_identity || e.is_identity();
    if (!has_identity) throw std::logic_error("finite isotropy result lacks the identity");

    std::vector<int> orders(els.size(), 0);
    for (size_t i = 0; i < els.size(); ++i) {
        if (index_of(els[i].inverted()) < 0)
            throw std::logic_error("finite isotropy result not closed under inversion");
        for (size_t j = 0; j < els.size(); ++j)
            if (index_of(compose(els[i], els[j])) < 0)
                throw std::logic_error("finite isotropy result not closed under composition");
        // Element order by repeated composition.
        Automorphism acc = els[i];
        int ord = 1;
        while (!acc.is_identity()) {
            acc = compose(acc, els[i]);
            ++ord;
            if (ord > static_cast<int>(els.size()))
                throw std::logic_error("element order exceeds group size");
        }
        orders[i] = ord;
    }
    GroupCertificate cert;
    cert.order = static_cast<int>(els.size());
    cert.cyclic = std::any_of(orders.begin(), orders.end(),
                              [&](int o) { return o == static_cast<int>(els.size()); });
    return cert;
}

}  // namespace deriv
