#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arithdyn/error.hpp"

namespace arithdyn {

template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division is exact in the coefficient domain, so intermediate entries
/// stay minors of the input instead of growing into nested fractions. Over
/// Q(t) this keeps the numerators polynomial.
template <class F>
F bareiss_determinant(DenseMatrix<F> M) {
    const std::size_t n = M.size();
    if (n == 0) throw arith_error("determinant of an empty matrix");
    for (const auto& row : M)
        if (row.size() != n) throw arith_error("determinant of a non-square matrix");

    const F zero = zero_like(M[0][0]);
    F prev = one_like(zero);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(M[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(M[piv][k])) ++piv;
            if (piv == n) return zero;
            std::swap(M[k], M[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                F v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = v / prev;
            }
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    F det = M[n - 1][n - 1];
    return negate ? -det : det;
}

}  // namespace arithdyn
