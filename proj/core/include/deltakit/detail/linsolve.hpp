#pragma once

#include <deltakit/rational.hpp>

#include <vector>

namespace deltakit::detail {

/// Solves A x = rhs by Gaussian elimination with exact pivoting. V is a
/// vector space over Rat (Rat itself, or Polynomial for parametric right-hand
/// sides). Throws Error when A is singular.
template <class V>
std::vector<V> solve_linear(std::vector<std::vector<Rat>> a, std::vector<V> rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw Error("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            const Rat f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= f * a[col][k];
            rhs[row] -= rhs[col] * f;
        }
    }
    std::vector<V> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        x.push_back(rhs[i] * (Rat(1) / a[i][i]));
    return x;
}

/// Determinant by exact Gaussian elimination.
Rat determinant(std::vector<std::vector<Rat>> a);

/// Negative definiteness via leading principal minors: (-1)^k det_k > 0.
bool negative_definite(const std::vector<std::vector<Rat>>& g);

} // namespace deltakit::detail
