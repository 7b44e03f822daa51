#include "deriv/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace deriv {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pivot)]);
        Rational inv = Rational(1) / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& x : m[static_cast<size_t>(row)]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * m[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<LinearSolution> solve_linear(const Matrix& a, const Vector& b) {
    const int rows = static_cast<int>(a.size());
    if (rows != static_cast<int>(b.size()))
        throw std::invalid_argument("solve_linear: shape mismatch");
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());

    Matrix aug(a);
    for (int r = 0; r < rows; ++r) aug[static_cast<size_t>(r)].push_back(b[static_cast<size_t>(r)]);
    std::vector<int> pivots = rref(aug);

    // A pivot in the augmented column means inconsistency.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    LinearSolution sol;
    sol.particular.assign(static_cast<size_t>(cols), Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i)
        sol.particular[static_cast<size_t>(pivots[i])] = aug[i][static_cast<size_t>(cols)];

    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        Vector v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(free_col)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -aug[i][static_cast<size_t>(free_col)];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::optional<Matrix> invert(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Matrix aug(a);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(aug[static_cast<size_t>(r)].size()) != n)
            throw std::invalid_argument("invert: non-square matrix");
        for (int c = 0; c < n; ++c)
            aug[static_cast<size_t>(r)].push_back(Rational(r == c ? 1 : 0));
    }
    std::vector<int> pivots = rref(aug);
    // All n pivots must land in the left block, else the input is singular.
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    for (int r = 0; r < n; ++r)
        if (pivots[static_cast<size_t>(r)] != r) return std::nullopt;
    Matrix inv(static_cast<size_t>(n), Vector(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                aug[static_cast<size_t>(r)][static_cast<size_t>(n + c)];
    return inv;
}

Rational determinant(Matrix a) {
    const int n = static_cast<int>(a.size());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
            det = -det;
        }
        const Rational& pv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < n; ++r) {
            Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
            if (f == 0) continue;
            for (int c = col; c < n; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    return det;
}

namespace {

Int row_gcd(const std::vector<Int>& row) {
    Int g(0);
    for (const Int& x : row) g = gcd(g, x);
    return g;
}

}  // namespace

std::optional<std::vector<Int>> dependent_combination(const std::vector<Vector>& columns) {
    const int m = static_cast<int>(columns.size());
    if (m == 0) return std::nullopt;
    const size_t n = columns[0].size();

    // Rows of work = the input columns, cleared to integers; augmented
    // with the identity to track the combination.
    std::vector<std::vector<Int>> work(static_cast<size_t>(m),
                                       std::vector<Int>(n + static_cast<size_t>(m), Int(0)));
    for (int j = 0; j < m; ++j) {
        if (columns[static_cast<size_t>(j)].size() != n)
            throw std::invalid_argument("dependent_combination: ragged columns");
        Int l(1);
        for (const Rational& q : columns[static_cast<size_t>(j)]) l = lcm(l, den(q));
        for (size_t i = 0; i < n; ++i) {
            const Rational& q = columns[static_cast<size_t>(j)][i];
            work[static_cast<size_t>(j)][i] = num(q) * (l / den(q));
        }
        work[static_cast<size_t>(j)][n + static_cast<size_t>(j)] = l;
    }

    // Fraction-free elimination on the left block; exact division by the
    // previous pivot keeps entries integral (Bareiss).
    Int prev(1);
    size_t done_rows = 0;
    for (size_t col = 0; col < n && done_rows < static_cast<size_t>(m); ++col) {
        size_t pivot = static_cast<size_t>(m);
        for (size_t r = done_rows; r < static_cast<size_t>(m); ++r)
            if (work[r][col] != 0) { pivot = r; break; }
        if (pivot == static_cast<size_t>(m)) continue;
        std::swap(work[done_rows], work[pivot]);
        const std::vector<Int> prow = work[done_rows];
        for (size_t r = done_rows + 1; r < static_cast<size_t>(m); ++r) {
            Int f = work[r][col];
            for (size_t c = 0; c < work[r].size(); ++c)
                work[r][c] = (prow[col] * work[r][c] - f * prow[c]) / prev;
        }
        prev = prow[col];
        ++done_rows;
    }

    for (size_t r = done_rows; r < static_cast<size_t>(m); ++r) {
        bool left_zero = true;
        for (size_t c = 0; c < n; ++c)
            if (work[r][c] != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        std::vector<Int> k(work[r].begin() + static_cast<std::ptrdiff_t>(n), work[r].end());
        Int g = row_gcd(k);
        if (g == 0) continue;
        for (Int& x : k) x /= g;
        for (const Int& x : k) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : k) y = -y;
            break;
        }
        return k;
    }
    return std::nullopt;
}

}  // namespace deriv
