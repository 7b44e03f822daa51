#include "deriv/printer.hpp"

#include <sstream>

namespace deriv {

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& coeff,
                 const std::string& monomial) {
    Rational mag = abs(coeff);
    if (first) {
        if (coeff < 0) os << "-";
    } else {
        os << (coeff < 0 ? " - " : " + ");
    }
    if (monomial.empty()) {
        os << to_string(mag);
        return;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << monomial;
}

}  // namespace

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        std::string monomial;
        for (size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += p.context()->name(static_cast<VarId>(v));
            if (mono[v] > 1) monomial += "^" + std::to_string(mono[v]);
        }
        append_term(os, first, coeff, monomial);
        first = false;
    }
    return os.str();
}

std::string to_string(const UniPoly& p) {
    static const RingContextPtr x_only = make_context({"X"});
    return to_string(MultiPoly::from_unipoly(x_only, p));
}

std::string to_string(const Derivation& d) {
    std::ostringstream os;
    const auto& ctx = d.context();
    os << "vars: ";
    for (int v = 0; v < ctx->size(); ++v) os << (v ? ", " : "") << ctx->name(v);
    os << "\n";
    for (int v = 0; v < ctx->size(); ++v)
        os << "d(" << ctx->name(v) << ") = " << to_string(d.image(v)) << "\n";
    return os.str();
}

std::string to_string(const Automorphism& rho) {
    std::ostringstream os;
    const auto& ctx = rho.context();
    for (int v = 0; v < ctx->size(); ++v)
        os << "rho(" << ctx->name(v) << ") = " << to_string(rho.forward()[static_cast<size_t>(v)])
           << "\n";
    for (int v = 0; v < ctx->size(); ++v)
        os << "rhoinv(" << ctx->name(v) << ") = "
           << to_string(rho.inverse()[static_cast<size_t>(v)]) << "\n";
    return os.str();
}

}  // namespace deriv
