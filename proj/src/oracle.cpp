#include "deriv/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace deriv {

int oracle_psolve_bound(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) throw std::domain_error("oracle_psolve needs a != 0");
    if (b.is_zero()) return 0;
    if (a.degree() >= 1) return std::max(b.degree() - a.degree(), 0);
    return b.degree();
}

std::optional<UniPoly> oracle_psolve(const UniPoly& a, const UniPoly& b, int max_degree) {
    if (a.is_zero()) throw std::domain_error("oracle_psolve needs a != 0");
    if (max_degree < 0) throw std::invalid_argument("negative degree bound");

    const int nunk = max_degree + 1;  // z_0 .. z_B
    const int top = max_degree + std::max(a.degree(), 0) + 1;
    Matrix rows;
    Vector rhs;
    for (int k = 0; k <= top; ++k) {
        // Coefficient of X^k in Z' - aZ - b.
        Vector row(static_cast<size_t>(nunk), Rational(0));
        if (k + 1 <= max_degree) row[static_cast<size_t>(k + 1)] += Rational(k + 1);
        for (int i = 0; i <= std::min(k, max_degree); ++i)
            row[static_cast<size_t>(i)] -= a.coeff(k - i);
        rows.push_back(std::move(row));
        rhs.push_back(b.coeff(k));
    }
    auto sol = solve_linear(rows, rhs);
    if (!sol) return std::nullopt;
    UniPoly f{sol->particular};
    if (f.derivative() != a * f + b)
        throw std::logic_error("oracle_psolve: linear solve produced a non-solution");
    return f;
}

namespace {

bool automorphism_before(const Automorphism& a, const Automorphism& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    for (size_t v = 0; v < a.forward().size(); ++v) {
        const auto& ta = a.forward()[v].terms();
        const auto& tb = b.forward()[v].terms();
        if (ta != tb) return ta < tb;
    }
    return false;
}

bool contains(const std::vector<Automorphism>& xs, const Automorphism& x) {
    return std::any_of(xs.begin(), xs.end(), [&](const Automorphism& y) { return y == x; });
}

// Lexicographic odometer over grid positions; returns false once exhausted.
bool advance(std::vector<size_t>& digits, size_t base) {
    for (size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

std::uint64_t pow_checked(std::uint64_t base, size_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (out > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
        out *= base;
    }
    return out;
}

bool y_affine(const Derivation& d) {
    const int m = d.context()->size() - 1;
    for (int i = 1; i <= m; ++i)
        if (d.image(i).total_degree_in_range(1, m) > 1) return false;
    return true;
}

// Exact refinement for Y-affine inputs: lift the unknown ansatz
// coefficients to fresh ring variables, expand the commutation residues
// generically, and read off one linear equation per (X,Y)-monomial.
std::vector<Automorphism> enum_linear_refined(const Derivation& d, const AnsatzConfig& cfg,
                                              std::vector<Rational> grid) {
    const RingContextPtr& ctx = d.context();
    const int m = ctx->size() - 1;
    const int width = cfg.max_degree + 1;
    const int nunk = m * m + m * width;
    auto cidx = [m](int i, int j) { return (i - 1) * m + (j - 1); };
    auto eidx = [m, width](int i, int s) { return m * m + (i - 1) * width + s; };

    std::vector<std::string> names = ctx->names();
    for (int t = 0; t < nunk; ++t) names.push_back("$u" + std::to_string(t));
    RingContextPtr ext = make_context(std::move(names));
    const int base = ctx->size();
    auto u = [&](int t) { return MultiPoly::var(ext, base + t); };

    std::vector<MultiPoly> d_ext_images;
    for (int v = 0; v < ctx->size(); ++v) {
        MultiPoly lift(ext);
        for (const auto& [mono, c] : d.image(v).terms()) {
            Monomial wide(static_cast<size_t>(ext->size()), 0);
            std::copy(mono.begin(), mono.end(), wide.begin());
            lift.add_term(std::move(wide), c);
        }
        d_ext_images.push_back(std::move(lift));
    }
    // The lifted unknowns are constants of the derivation.
    for (int t = 0; t < nunk; ++t) d_ext_images.emplace_back(ext);

    std::vector<Automorphism> found;
    for (const Rational& alpha : grid) {
        // Symbolic ansatz images in the extended ring.
        std::vector<MultiPoly> rho_ext;
        rho_ext.push_back(MultiPoly::var(ext, 0) + MultiPoly::constant(ext, alpha));
        for (int i = 1; i <= m; ++i) {
            MultiPoly img(ext);
            for (int j = 1; j <= m; ++j)
                img += u(cidx(i, j)) * MultiPoly::var(ext, j);
            for (int s = 0; s < width; ++s)
                img += u(eidx(i, s)) * MultiPoly::var(ext, 0, s);
            rho_ext.push_back(std::move(img));
        }
        for (int t = 0; t < nunk; ++t) rho_ext.push_back(u(t));

        Derivation dx(ext, d_ext_images);
        Matrix rows;
        Vector rhs;
        bool linear = true;
        for (int i = 1; i <= m && linear; ++i) {
            MultiPoly residue = d_ext_images[static_cast<size_t>(i)].substitute(rho_ext) -
                                dx.apply(rho_ext[static_cast<size_t>(i)]);
            // Group by the (X,Y)-part; each group is one equation.
            std::map<Monomial, std::pair<Vector, Rational>> eqs;
            for (const auto& [mono, c] : residue.terms()) {
                int udeg = 0, uvar = -1;
                for (int t = 0; t < nunk; ++t) {
                    udeg += mono[static_cast<size_t>(base + t)];
                    if (mono[static_cast<size_t>(base + t)] > 0) uvar = t;
                }
                if (udeg > 1) { linear = false; break; }
                Monomial xy(mono.begin(), mono.begin() + base);
                auto& [row, b] = eqs.try_emplace(xy, std::make_pair(Vector(static_cast<size_t>(nunk), Rational(0)), Rational(0))).first->second;
                if (udeg == 1) row[static_cast<size_t>(uvar)] += c;
                else b -= c;
            }
            for (auto& [xy, eq] : eqs) {
                rows.push_back(std::move(eq.first));
                rhs.push_back(std::move(eq.second));
            }
        }
        if (!linear) throw std::logic_error("Y-affine input produced nonlinear constraints");

        auto sol = solve_linear(rows, rhs);
        if (!sol) continue;

        const size_t dim = sol->nullspace.size();
        std::uint64_t combos = pow_checked(grid.size(), dim, cfg.budget);
        if (combos > cfg.budget)
            throw BudgetExceededError("isotropy enumeration: free-parameter grid too large");

        std::vector<size_t> digits(dim, 0);
        do {
            Vector uvals = sol->particular;
            for (size_t k = 0; k < dim; ++k)
                for (size_t t = 0; t < uvals.size(); ++t)
                    uvals[t] += grid[digits[k]] * sol->nullspace[k][t];

            std::vector<std::vector<Rational>> c(static_cast<size_t>(m),
                                                 std::vector<Rational>(static_cast<size_t>(m)));
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                        uvals[static_cast<size_t>(cidx(i, j))];
            std::vector<UniPoly> e;
            for (int i = 1; i <= m; ++i) {
                Vector coeffs(uvals.begin() + eidx(i, 0), uvals.begin() + eidx(i, 0) + width);
                e.emplace_back(std::move(coeffs));
            }
            auto rho = Automorphism::affine(ctx, alpha, c, e);
            if (rho && commutes(*rho, d) && !contains(found, *rho))
                found.push_back(std::move(*rho));
        } while (advance(digits, grid.size()));
    }
    return found;
}

std::vector<Automorphism> enum_full_grid(const Derivation& d, const AnsatzConfig& cfg,
                                         std::vector<Rational> grid) {
    const RingContextPtr& ctx = d.context();
    const int m = ctx->size() - 1;
    const int width = cfg.max_degree + 1;
    const size_t nunk = static_cast<size_t>(1 + m * m + m * width);  // alpha, c, e

    std::uint64_t combos = pow_checked(grid.size(), nunk, cfg.budget);
    if (combos > cfg.budget)
        throw BudgetExceededError("isotropy enumeration: full grid too large");

    std::vector<Automorphism> found;
    std::vector<size_t> digits(nunk, 0);
    do {
        size_t pos = 0;
        Rational alpha = grid[digits[pos++]];
        std::vector<std::vector<Rational>> c(static_cast<size_t>(m),
                                             std::vector<Rational>(static_cast<size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] = grid[digits[pos++]];
        std::vector<UniPoly> e;
        for (int i = 0; i < m; ++i) {
            Vector coeffs(static_cast<size_t>(width));
            for (int s = 0; s < width; ++s) coeffs[static_cast<size_t>(s)] = grid[digits[pos++]];
            e.emplace_back(std::move(coeffs));
        }
        if (m > 0 && determinant(c) == 0) continue;
        auto rho = Automorphism::affine(ctx, alpha, c, e);
        if (rho && commutes(*rho, d) && !contains(found, *rho)) found.push_back(std::move(*rho));
    } while (advance(digits, grid.size()));
    return found;
}

}  // namespace

std::vector<Automorphism> oracle_isotropy_enum(const Derivation& d, const AnsatzConfig& cfg) {
    const RingContextPtr& ctx = d.context();
    if (d.image(0) != MultiPoly::constant(ctx, Rational(1)))
        throw std::invalid_argument("oracle_isotropy_enum requires d(X) = 1");
    if (cfg.coefficient_grid.empty()) throw std::invalid_argument("empty coefficient grid");

    std::vector<Rational> grid = cfg.coefficient_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<Automorphism> found;
    if (ctx->size() == 1) {
        // K[X] only: every translation commutes with d/dX.
        for (const Rational& alpha : grid) {
            auto rho = Automorphism::affine(ctx, alpha, {}, {});
            if (rho && commutes(*rho, d)) found.push_back(std::move(*rho));
        }
    } else if (y_affine(d)) {
        found = enum_linear_refined(d, cfg, grid);
    } else {
        found = enum_full_grid(d, cfg, grid);
    }
    std::sort(found.begin(), found.end(), automorphism_before);
    return found;
}

std::optional<IdealWitness> oracle_ideal_search(const Derivation& d, const AnsatzConfig& cfg) {
    const RingContextPtr& ctx = d.context();
    const int m = ctx->size() - 1;
    if (cfg.coefficient_grid.empty()) throw std::invalid_argument("empty coefficient grid");

    std::vector<Rational> grid = cfg.coefficient_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const int width = cfg.max_degree + 1;
    std::uint64_t total = 0;
    for (int k = 1; k <= m; ++k) {
        size_t nfree = static_cast<size_t>(m - k) + static_cast<size_t>(width);
        std::uint64_t combos = pow_checked(grid.size(), nfree, cfg.budget);
        if (combos > cfg.budget || (total += combos) > cfg.budget)
            throw BudgetExceededError("ideal search grid too large");
    }

    for (int k = 1; k <= m; ++k) {
        const size_t nlin = static_cast<size_t>(m - k);
        std::vector<size_t> digits(nlin + static_cast<size_t>(width), 0);
        do {
            MultiPoly g = MultiPoly::var(ctx, k);
            size_t pos = 0;
            for (int j = k + 1; j <= m; ++j) {
                const Rational& lam = grid[digits[pos++]];
                if (lam != 0) g += lam * MultiPoly::var(ctx, j);
            }
            for (int s = 0; s < width; ++s) {
                const Rational& c = grid[digits[pos++]];
                if (c != 0) g += c * MultiPoly::var(ctx, 0, s);
            }
            if (auto w = ideal_stable(d, g)) return w;
        } while (advance(digits, grid.size()));
    }
    return std::nullopt;
}

}  // namespace deriv
