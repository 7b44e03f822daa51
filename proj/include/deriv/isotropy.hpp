#pragma once

#include <stdexcept>
#include <string>

#include "deriv/derivation.hpp"
#include "deriv/lequain.hpp"
#include "deriv/linalg.hpp"

namespace deriv {

// Raised when an input falls outside the classes a solver handles.
class UnsupportedClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two-variable derivation d(X)=1, d(Y) = h_0 + h_1 Y + ... + h_n Y^n
// with h_n != 0 and n >= 2.
struct YDegreeDerivation {
    RingContextPtr ctx;       // [X, Y]
    std::vector<UniPoly> h;   // h_0 .. h_n

    int n() const { return static_cast<int>(h.size()) - 1; }
    Derivation derivation() const;

    static std::optional<YDegreeDerivation> from_derivation(const Derivation& d);
};

// Solution set of the affine commutation ansatz rho(X)=X+alpha,
// rho(Y_i) = sum_j c_ij Y_j + e_i(X): an affine subspace of the unknown
// vector (c entries then e coefficients), intersected with det(c) != 0.
struct AffineFamily {
    RingContextPtr ctx;
    int num_y = 0;
    int deg_bound = 0;
    Rational alpha{0};
    bool alpha_free = false;  // ring is K[X]: the whole translation family

    std::vector<std::string> unknowns;
    Vector particular;
    std::vector<Vector> basis;
    std::vector<std::string> equations;  // human-readable pivot rows

    int dimension() const { return static_cast<int>(basis.size()); }
    bool is_infinite() const { return alpha_free || !basis.empty(); }

    // particular + sum params_k * basis_k, as an automorphism; nullopt
    // when the coefficient matrix is singular at that point.
    std::optional<Automorphism> member(const Vector& params) const;
};

struct IsotropyResult {
    enum class Kind { Finite, Affine } kind = Kind::Finite;
    enum class Completeness { Complete, AnsatzOnly } completeness = Completeness::Complete;
    std::vector<Automorphism> elements;        // finite case; identity first
    std::optional<AffineFamily> family;        // affine case
};

// m-th roots of unity in Q: {1} for odd m, {1, -1} for even m.
std::vector<Rational> roots_of_unity_rational(int m);

// Complete isotropy group of a Y-degree-n derivation, n >= 2. Per
// admissible b_1 the translation part b_0 is forced by the Y^{n-1}
// coefficient of the commutation identity; candidates are then verified
// against the full identity.
IsotropyResult isotropy_two_var(const YDegreeDerivation& d);

// Simple canonical forms have trivial isotropy (complete); non-simple
// ones fall back to the affine ansatz search (ansatz-only).
// deg_bound < 0 picks a bound from the input degrees.
IsotropyResult isotropy_shamsuddin(const ShamsuddinForm& form, int deg_bound = -1);

// Exact solve of the commutation constraints over the affine ansatz.
// Requires d(X) = 1 and every d(Y_i) affine in the Y-variables; other
// inputs raise UnsupportedClassError. Always ansatz-only.
IsotropyResult affine_isotropy_search(const Derivation& d, int deg_bound);

struct GroupCertificate {
    int order = 0;
    bool cyclic = false;
};

// Verifies identity/closure/inverses of a finite result exactly; throws
// std::logic_error on violation (impossible for verified elements).
GroupCertificate group_table(const IsotropyResult& result);

}  // namespace deriv
