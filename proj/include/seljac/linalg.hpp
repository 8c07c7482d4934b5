#pragma once

#include <optional>
#include <vector>

#include "seljac/field.hpp"

namespace seljac {
namespace linalg {

using Matrix = std::vector<std::vector<FieldElement>>;

/// One nonzero kernel vector of A (rows x cols), or nullopt if the kernel is
/// trivial. Exact Gaussian elimination with first-nonzero pivoting.
inline std::optional<std::vector<FieldElement>> nullspace_vector(const FieldPtr& F,
                                                                 Matrix A) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    if (cols == 0) return std::nullopt;
    std::vector<int> pivot_of_col(cols, -1);
    size_t prow = 0;
    for (size_t c = 0; c < cols && prow < rows; ++c) {
        size_t sel = prow;
        while (sel < rows && F->is_zero(A[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[prow]);
        FieldElement inv = F->inv(A[prow][c]);
        for (size_t j = c; j < cols; ++j) A[prow][j] = A[prow][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || F->is_zero(A[r][c])) continue;
            FieldElement fct = A[r][c];
            for (size_t j = c; j < cols; ++j) A[r][j] = A[r][j] - fct * A[prow][j];
        }
        pivot_of_col[c] = static_cast<int>(prow);
        ++prow;
    }
    // first free column gives a kernel vector
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<FieldElement> v(cols, F->zero());
        v[c] = F->one();
        for (size_t j = 0; j < c; ++j) {
            if (pivot_of_col[j] >= 0) v[j] = F->neg(A[static_cast<size_t>(pivot_of_col[j])][c]);
        }
        return v;
    }
    return std::nullopt;
}

/// Solve A x = b (rows x cols), returning one solution or nullopt.
inline std::optional<std::vector<FieldElement>> solve(const FieldPtr& F, Matrix A,
                                                      std::vector<FieldElement> b) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    for (size_t r = 0; r < rows; ++r) A[r].push_back(b[r]);
    std::vector<int> pivot_of_col(cols, -1);
    size_t prow = 0;
    for (size_t c = 0; c < cols && prow < rows; ++c) {
        size_t sel = prow;
        while (sel < rows && F->is_zero(A[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[prow]);
        FieldElement inv = F->inv(A[prow][c]);
        for (size_t j = c; j <= cols; ++j) A[prow][j] = A[prow][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || F->is_zero(A[r][c])) continue;
            FieldElement fct = A[r][c];
            for (size_t j = c; j <= cols; ++j) A[r][j] = A[r][j] - fct * A[prow][j];
        }
        pivot_of_col[c] = static_cast<int>(prow);
        ++prow;
    }
    for (size_t r = prow; r < rows; ++r)
        if (!F->is_zero(A[r][cols])) return std::nullopt;
    std::vector<FieldElement> x(cols, F->zero());
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = A[static_cast<size_t>(pivot_of_col[c])][cols];
    return x;
}

/// Determinant by fraction-free (Bareiss) elimination; divisions are exact.
inline FieldElement determinant(const FieldPtr& F, Matrix A) {
    size_t n = A.size();
    if (n == 0) return F->one();
    bool negate = false;
    FieldElement prev = F->one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (F->is_zero(A[k][k])) {
            size_t sel = k + 1;
            while (sel < n && F->is_zero(A[sel][k])) ++sel;
            if (sel == n) return F->zero();
            std::swap(A[sel], A[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                A[i][j] = F->div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev);
            }
            A[i][k] = F->zero();
        }
        prev = A[k][k];
    }
    FieldElement det = A[n - 1][n - 1];
    return negate ? F->neg(det) : det;
}

}  // namespace linalg
}  // namespace seljac
