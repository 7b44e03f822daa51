#include "deriv/lequain.hpp"

#include <stdexcept>

namespace deriv {

DivisionSequence division_sequence(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) throw std::domain_error("division sequence needs a != 0");
    DivisionSequence seq;
    auto [q, r] = uni_divmod(b, a);
    seq.quotients.push_back(q);
    seq.remainders.push_back(std::move(r));
    while (true) {
        auto [qn, rn] = uni_divmod(seq.quotients.back().derivative(), a);
        seq.remainders.push_back(std::move(rn));
        if (qn.is_zero()) break;
        seq.quotients.push_back(std::move(qn));
    }
    return seq;
}

UniPoly pab(const UniPoly& a, const UniPoly& b) {
    DivisionSequence seq = division_sequence(a, b);
    UniPoly sum;
    for (const auto& r : seq.remainders) sum += r;
    return sum;
}

std::optional<UniPoly> psolve(const UniPoly& a, const UniPoly& b) {
    DivisionSequence seq = division_sequence(a, b);
    UniPoly sum;
    for (const auto& r : seq.remainders) sum += r;
    if (!sum.is_zero()) return std::nullopt;
    UniPoly f;
    for (const auto& q : seq.quotients) f -= q;
    if (f.derivative() != a * f + b)
        throw std::logic_error("psolve: candidate solution failed verification");
    return f;
}

namespace {

// Antiderivative with zero constant term; the a = 0 fallback where
// f' = b is always solvable.
UniPoly integrate(const UniPoly& b) {
    std::vector<Rational> coeffs(static_cast<size_t>(std::max(b.degree() + 2, 1)), Rational(0));
    for (int i = 0; i <= b.degree() && !b.is_zero(); ++i)
        coeffs[static_cast<size_t>(i) + 1] = b.coeff(i) / Rational(i + 1);
    return UniPoly{std::move(coeffs)};
}

UniPoly combine(const std::vector<UniPoly>& bs, const std::vector<Int>& k) {
    UniPoly sum;
    for (size_t j = 0; j < bs.size(); ++j) sum += Rational(k[j]) * bs[j];
    return sum;
}

}  // namespace

ComponentVerdict component_simple(const UniPoly& a, const std::vector<UniPoly>& bs) {
    ComponentVerdict v;
    const size_t r = bs.size();
    if (r == 0) {
        // Empty component: the restriction is d/dX on K[X], simple.
        v.simple = true;
        return v;
    }

    if (a.is_zero()) {
        // Z' = b is always solvable by integration; unit dependency on b_1.
        std::vector<Int> k(r, Int(0));
        k[0] = 1;
        v.dependency = DependencyWitness{std::move(k), integrate(bs[0])};
        return v;
    }

    std::vector<UniPoly> p(r);
    for (size_t j = 0; j < r; ++j) p[j] = pab(a, bs[j]);

    // A vanishing pab alone is a dependency; smallest index wins.
    for (size_t j = 0; j < r; ++j) {
        if (!p[j].is_zero()) continue;
        std::vector<Int> k(r, Int(0));
        k[j] = 1;
        auto f = psolve(a, bs[j]);
        if (!f) throw std::logic_error("pab = 0 but psolve found no solution");
        v.dependency = DependencyWitness{std::move(k), std::move(*f)};
        return v;
    }

    const size_t width = static_cast<size_t>(std::max(a.degree(), 1));
    std::vector<Vector> columns(r, Vector(width, Rational(0)));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < width; ++i) columns[j][i] = p[j].coeff(static_cast<int>(i));

    auto dep = dependent_combination(columns);
    if (!dep) {
        v.simple = true;
        v.rank = static_cast<int>(r);
        return v;
    }
    // pab is linear in b, so the combined equation is solvable.
    auto f = psolve(a, combine(bs, *dep));
    if (!f) throw std::logic_error("dependent pab vectors but no combined solution");
    v.rank = rank(columns);
    v.dependency = DependencyWitness{std::move(*dep), std::move(*f)};
    return v;
}

SimplicityVerdict shamsuddin_simple(const ShamsuddinForm& form) {
    SimplicityVerdict verdict;
    verdict.simple = true;
    for (size_t i = 0; i < form.components.size(); ++i) {
        ComponentVerdict cv = component_simple(form.components[i].a, form.components[i].bs);
        if (!cv.simple && verdict.simple) {
            verdict.simple = false;
            verdict.failing_component = static_cast<int>(i);
        }
        verdict.components.push_back(std::move(cv));
    }
    return verdict;
}

}  // namespace deriv
