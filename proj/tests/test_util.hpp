#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "deriv/multipoly.hpp"
#include "deriv/parser.hpp"

namespace testutil {

using deriv::MultiPoly;
using deriv::Rational;
using deriv::RingContextPtr;
using deriv::UniPoly;

using Rng = std::mt19937_64;

inline Rational random_coeff(Rng& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return Rational(dist(rng));
}

inline UniPoly random_unipoly(Rng& rng, int max_degree, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_coeff(rng, lo, hi));
    return UniPoly{std::move(coeffs)};
}

inline UniPoly random_nonzero_unipoly(Rng& rng, int max_degree, int lo = -5, int hi = 5) {
    for (;;) {
        UniPoly p = random_unipoly(rng, max_degree, lo, hi);
        if (!p.is_zero()) return p;
    }
}

inline MultiPoly random_multipoly(Rng& rng, const RingContextPtr& ctx, int terms = 4,
                                  int max_exp = 2) {
    MultiPoly p(ctx);
    std::uniform_int_distribution<int> e(0, max_exp);
    for (int t = 0; t < terms; ++t) {
        deriv::Monomial m(static_cast<size_t>(ctx->size()), 0);
        for (auto& x : m) x = e(rng);
        p.add_term(std::move(m), random_coeff(rng, -3, 3));
    }
    return p;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(DERIV_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline deriv::Derivation load_fixture(const std::string& name) {
    return deriv::parse_derivation(read_fixture(name));
}

}  // namespace testutil
