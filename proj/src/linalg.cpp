#include "zzpa/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "zzpa/error.hpp"

namespace zzpa {

namespace {

// Row echelon form in place; returns the pivot column of each pivot row.
// Augmented columns at index >= ncols are eliminated but never pivoted on.
std::vector<int> eliminate(FieldMatrix& M, int ncols) {
    std::vector<int> pivot_cols;
    int rows = static_cast<int>(M.size());
    int row = 0;
    for (int col = 0; col < ncols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r) {
            if (!M[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(M[row], M[pr]);
        FieldElement inv = M[row][col].inverse();
        int width = static_cast<int>(M[row].size());
        for (int c = col; c < width; ++c) M[row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            FieldElement f = M[r][col];
            for (int c = col; c < width; ++c) M[r][c] -= f * M[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

SolveResult solve_linear(FieldMatrix A, FieldVector b) {
    if (A.size() != b.size())
        throw std::logic_error("solve_linear: shape mismatch");
    if (A.empty()) return {SolveStatus::unique, {}};
    int n = static_cast<int>(A[0].size());
    for (std::size_t r = 0; r < A.size(); ++r) {
        if (static_cast<int>(A[r].size()) != n)
            throw std::logic_error("solve_linear: ragged matrix");
        A[r].push_back(b[r]);
    }
    std::vector<int> pivots = eliminate(A, n);
    for (std::size_t r = pivots.size(); r < A.size(); ++r)
        if (!A[r][n].is_zero()) return {SolveStatus::inconsistent, {}};
    if (static_cast<int>(pivots.size()) < n)
        return {SolveStatus::underdetermined, {}};
    const FieldContextPtr& ctx = A[0][0].context();
    FieldVector x(n, FieldElement::zero(ctx));
    for (int r = 0; r < n; ++r) x[pivots[r]] = A[r][n];
    return {SolveStatus::unique, std::move(x)};
}

KernelResult kernel_vector(FieldMatrix A) {
    if (A.empty()) return {0, {}};
    int n = static_cast<int>(A.size());
    for (auto& row : A)
        if (static_cast<int>(row.size()) != n)
            throw std::logic_error("kernel_vector: matrix not square");
    const FieldContextPtr& ctx = A[0][0].context();
    std::vector<int> pivots = eliminate(A, n);
    int rank = static_cast<int>(pivots.size());
    int nullity = n - rank;
    if (nullity != 1) return {nullity, {}};
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    FieldVector v(n, FieldElement::zero(ctx));
    v[free_col] = FieldElement::one(ctx);
    // Rows are reduced: row r reads x[pivots[r]] + M[r][free] * x[free] = 0.
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -A[r][free_col];
    return {1, std::move(v)};
}

}  // namespace zzpa
