#pragma once

#include <cstdint>
#include <stdexcept>

#include "deriv/derivation.hpp"
#include "deriv/linalg.hpp"

namespace deriv {

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AnsatzConfig {
    int max_degree = 2;
    std::vector<Rational> coefficient_grid = {Rational(-2), Rational(-1), Rational(0),
                                              Rational(1), Rational(2)};
    std::uint64_t seed = 0;
    std::uint64_t budget = 2'000'000;  // candidate cap for enumerative searches
};

// Undetermined-coefficients check of Z' = aZ + b: sets up the exact
// linear system for Z = sum z_i X^i, i <= max_degree, independent of the
// division-sequence solver. With a correct bound (deg b - deg a for
// non-constant a, deg b otherwise) a nullopt refutes solvability.
std::optional<UniPoly> oracle_psolve(const UniPoly& a, const UniPoly& b, int max_degree);

// Degree bound that makes oracle_psolve complete.
int oracle_psolve_bound(const UniPoly& a, const UniPoly& b);

// All affine-ansatz automorphisms commuting with d, found by grid
// enumeration (with an exact linear-solve refinement when every d(Y_i)
// is affine in the Y-variables). Every returned element is re-verified
// through commutes(). Throws BudgetExceededError rather than truncating.
std::vector<Automorphism> oracle_isotropy_enum(const Derivation& d, const AnsatzConfig& cfg);

// Refutation-only search for d-stable principal ideals over generators
// (monic linear form in the Y-variables) + K[X] tail with grid
// coefficients. A nullopt is not a simplicity proof.
std::optional<IdealWitness> oracle_ideal_search(const Derivation& d, const AnsatzConfig& cfg);

}  // namespace deriv
