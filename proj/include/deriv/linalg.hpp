#pragma once

#include <optional>
#include <vector>

#include "deriv/rational.hpp"

namespace deriv {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

// Reduce in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Solution set of A x = b: one particular solution plus a nullspace basis.
// nullopt when the system is inconsistent.
struct LinearSolution {
    Vector particular;
    std::vector<Vector> nullspace;
};
std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b);

std::optional<Matrix> invert(const Matrix& a);

Rational determinant(Matrix a);

// Nontrivial integer dependency among the given columns: k != 0 with
// sum_j k_j * col_j = 0, entries coprime, first nonzero entry positive.
// Computed by fraction-free (Bareiss) elimination after clearing row
// denominators. nullopt when the columns are linearly independent.
std::optional<std::vector<Int>> dependent_combination(const std::vector<Vector>& columns);

}  // namespace deriv
