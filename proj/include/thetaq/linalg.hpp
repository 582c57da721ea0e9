#pragma once

#include "thetaq/rational.hpp"

#include <cstddef>
#include <vector>

namespace thetaq {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }
inline Rational inverse(const Rational& q) { return 1 / q; }
inline GaussianRational inverse(const GaussianRational& g) { return g.inverse(); }

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// In-place reduced row echelon form with pivots searched in the first `ncols` columns;
/// row operations act on whole rows. Pivot rows come first, rows that are entirely zero
/// are dropped, leftover rows (zero in the pivot columns) follow. Returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        std::size_t width = rows[r].size();
        T inv = inverse(rows[r][c]);
        for (std::size_t k = c; k < width; ++k)
            if (!is_zero(rows[r][k])) rows[r][k] = rows[r][k] * inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || is_zero(rows[q][c])) continue;
            T f = rows[q][c];
            for (std::size_t k = c; k < width; ++k)
                if (!is_zero(rows[r][k])) rows[q][k] = rows[q][k] - f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<T> kept(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(r));
    for (std::size_t q = r; q < rows.size(); ++q)
        for (const T& x : rows[q])
            if (!is_zero(x)) {
                kept.push_back(rows[q]);
                break;
            }
    rows = std::move(kept);
    return pivots;
}

/// Basis of {x : A x = 0}, one vector per free column, in column order.
template <class T>
Matrix<T> null_space(Matrix<T> a, std::size_t ncols) {
    std::vector<std::size_t> piv = rref(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : piv) is_pivot[p] = true;
    Matrix<T> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(ncols, T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = T(0) - a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
std::size_t rank(Matrix<T> a, std::size_t ncols) {
    return rref(a, ncols).size();
}

}  // namespace thetaq
