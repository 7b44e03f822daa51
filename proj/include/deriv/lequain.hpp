#pragma once

#include "deriv/derivation.hpp"
#include "deriv/linalg.hpp"
#include "deriv/unipoly.hpp"

namespace deriv {

// The division sequence for (a, b):
//   b      = a q_1 + r_1
//   q_1'   = a q_2 + r_2
//   ...
//   q_t'   = a 0   + r_{t+1}
// with deg r_i < deg a throughout and deg q_{i+1} < deg q_i.
struct DivisionSequence {
    std::vector<UniPoly> quotients;   // q_1 .. q_t
    std::vector<UniPoly> remainders;  // r_1 .. r_{t+1}
    int t() const { return static_cast<int>(quotients.size()); }
};

DivisionSequence division_sequence(const UniPoly& a, const UniPoly& b);

// Sum of the remainders of the division sequence; zero iff Z' = aZ + b
// has a polynomial solution.
UniPoly pab(const UniPoly& a, const UniPoly& b);

// The unique polynomial solution f of f' = a f + b, when one exists;
// f = -sum q_i, verified by substitution before returning.
std::optional<UniPoly> psolve(const UniPoly& a, const UniPoly& b);

// A nontrivial dependency k with a polynomial solution f of
// f' = a f + sum_j k_j b_j; the non-simplicity certificate.
struct DependencyWitness {
    std::vector<Int> k;  // coprime integer entries, not all zero
    UniPoly f;
};

struct ComponentVerdict {
    bool simple = false;
    int rank = 0;  // rank of the pab coefficient vectors
    std::optional<DependencyWitness> dependency;
};

// Simplicity of one canonical component: a != 0 and the pab(a, b_j)
// linearly independent over Q.
ComponentVerdict component_simple(const UniPoly& a, const std::vector<UniPoly>& bs);

struct SimplicityVerdict {
    bool simple = false;
    int failing_component = -1;  // index into components, -1 when simple
    std::vector<ComponentVerdict> components;
};

// Local-global principle: simple iff every canonical component is.
SimplicityVerdict shamsuddin_simple(const ShamsuddinForm& form);

}  // namespace deriv
