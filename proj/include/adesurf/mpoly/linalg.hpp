#pragma once

#include <utility>
#include <vector>

#include "adesurf/errors.hpp"
#include "adesurf/exactnum/upoly.hpp"

namespace adesurf {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> identity_matrix(std::size_t n) {
    Matrix<K> m(n, std::vector<K>(n, K(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = K(1);
    return m;
}

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix<K> r(n, std::vector<K>(m, K(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (detail::coeff_zero(a[i][t])) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
    if (a.empty()) return {};
    Matrix<K> r(a[0].size(), std::vector<K>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && detail::coeff_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const K inv = K(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::coeff_zero(a[i][c])) continue;
            const K f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!detail::coeff_zero(a[r][j])) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> a) {
    return row_reduce(a).size();
}

/// Inverse of a square matrix; throws SingularMatrix.
template <class K>
Matrix<K> inverse(const Matrix<K>& a) {
    const std::size_t n = a.size();
    Matrix<K> aug(n, std::vector<K>(2 * n, K(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw SingularMatrix("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = K(1);
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    Matrix<K> inv(n, std::vector<K>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace adesurf
