#include "deriv/multipoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace deriv {

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("ring context needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
}

std::optional<VarId> RingContext::find(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<VarId>(i);
    return std::nullopt;
}

RingContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const RingContext>(std::move(names));
}

bool same_context(const RingContextPtr& a, const RingContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

MultiPoly MultiPoly::constant(RingContextPtr ctx, Rational c) {
    MultiPoly p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Monomial(static_cast<size_t>(p.ctx_->size()), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::var(RingContextPtr ctx, VarId v, int exponent) {
    MultiPoly p(std::move(ctx));
    if (v < 0 || v >= p.ctx_->size()) throw std::out_of_range("variable id outside ring context");
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Monomial m(static_cast<size_t>(p.ctx_->size()), 0);
    m[static_cast<size_t>(v)] = exponent;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(RingContextPtr ctx, const UniPoly& p, VarId v) {
    MultiPoly out(std::move(ctx));
    for (int i = 0; i <= p.degree() && !p.is_zero(); ++i) {
        if (p.coeff(i) == 0) continue;
        Monomial m(static_cast<size_t>(out.ctx_->size()), 0);
        m[static_cast<size_t>(v)] = i;
        out.terms_.emplace(std::move(m), p.coeff(i));
    }
    return out;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool MultiPoly::depends_on(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<size_t>(v)] > 0) return true;
    return false;
}

int MultiPoly::degree_in(VarId v) const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<size_t>(v)]);
    return d;
}

int MultiPoly::total_degree_in_range(VarId first, VarId last) const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (VarId v = first; v <= last; ++v) s += m[static_cast<size_t>(v)];
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::check_same_ring(const MultiPoly& rhs) const {
    if (!same_context(ctx_, rhs.ctx_))
        throw std::invalid_argument("mismatched ring contexts");
}

void MultiPoly::add_term(Monomial m, Rational c) {
    if (static_cast<int>(m.size()) != ctx_->size())
        throw std::invalid_argument("monomial width does not match ring context");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_ring(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_ring(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.check_same_ring(rhs);
    MultiPoly out(lhs.ctx_);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = out.terms_.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out(p.ctx_);
    if (c == 0) return out;
    out.terms_ = p.terms_;
    for (auto& [m, x] : out.terms_) x *= c;
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly acc = constant(ctx_, Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::partial_derivative(VarId v) const {
    MultiPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
        int e = m[static_cast<size_t>(v)];
        if (e == 0) continue;
        Monomial dm = m;
        dm[static_cast<size_t>(v)] = e - 1;
        out.add_term(std::move(dm), Rational(e) * c);
    }
    return out;
}

MultiPoly MultiPoly::coeff_in(VarId v, int k) const {
    MultiPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m[static_cast<size_t>(v)] != k) continue;
        Monomial red = m;
        red[static_cast<size_t>(v)] = 0;
        out.add_term(std::move(red), c);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::as_poly_in(VarId v) const {
    if (terms_.empty()) return {};
    int d = degree_in(v);
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(ctx_));
    for (const auto& [m, c] : terms_) {
        Monomial red = m;
        int k = red[static_cast<size_t>(v)];
        red[static_cast<size_t>(v)] = 0;
        out[static_cast<size_t>(k)].add_term(std::move(red), c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    RingContextPtr target;
    for (const auto& img : images) {
        if (!target) target = img.context();
        else if (!same_context(target, img.context()))
            throw std::invalid_argument("substitution images over different rings");
    }
    if (!target) throw std::invalid_argument("substitute: no images given");
    for (int v = 0; v < ctx_->size(); ++v)
        if (depends_on(v) && (v >= static_cast<int>(images.size())))
            throw std::invalid_argument("missing image for variable " + ctx_->name(v));

    MultiPoly out(target);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) term = term * images[v].pow(m[v]);
        out += term;
    }
    return out;
}

std::optional<UniPoly> MultiPoly::to_unipoly(VarId v) const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && static_cast<VarId>(i) != v) return std::nullopt;
        size_t e = static_cast<size_t>(m[static_cast<size_t>(v)]);
        if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
        coeffs[e] = c;
    }
    return UniPoly{std::move(coeffs)};
}

std::optional<MultiPoly> multi_exact_div(const MultiPoly& p, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    MultiPoly rem = p;
    MultiPoly quot(p.context());
    const auto& glead = *g.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().rbegin();
        Monomial qm(rm.size());
        for (size_t i = 0; i < rm.size(); ++i) {
            qm[i] = rm[i] - glead.first[i];
            if (qm[i] < 0) return std::nullopt;
        }
        MultiPoly t(p.context());
        t.add_term(std::move(qm), rc / glead.second);
        quot += t;
        rem -= t * g;
    }
    return quot;
}

}  // namespace deriv
