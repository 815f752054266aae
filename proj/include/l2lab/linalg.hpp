#ifndef L2LAB_LINALG_HPP
#define L2LAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rational_function.hpp"

namespace l2lab {

// Gaussian elimination over an exact field. Pivot selection is first nonzero
// in row-major scan order, so results are deterministic.
template <class F>
std::size_t field_rank(matrix<F> m) {
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && is_zero_value(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        }
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (is_zero_value(m(i, col))) continue;
            const F f = m(i, col) / m(row, col);
            m(i, col) = F();
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                if (is_zero_value(m(row, j))) continue;
                m(i, j) -= f * m(row, j);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <class F>
std::vector<std::size_t> field_rref(matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && is_zero_value(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        }
        const F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
            if (!is_zero_value(m(row, j))) m(row, j) = m(row, j) * inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero_value(m(i, col))) continue;
            const F f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (is_zero_value(m(row, j))) continue;
                m(i, j) -= f * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Exact basis of the right kernel { v : A v = 0 }. Empty iff A is injective
// on column vectors. Vectors are scaled so their first nonzero coordinate
// is 1.
template <class F>
std::vector<std::vector<F>> kernel_basis(matrix<F> m) {
    const std::size_t n = m.cols();
    const std::vector<std::size_t> pivots = field_rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(n, F());
        v[free_col] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m(r, free_col);
        }
        for (auto& x : v) {
            if (is_zero_value(x)) continue;
            const F inv = F(1) / x;
            for (auto& y : v)
                if (!is_zero_value(y)) y = y * inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::optional<matrix<F>> field_inverse(const matrix<F>& a) {
    if (a.rows() != a.cols()) throw non_square();
    const std::size_t n = a.rows();
    matrix<F> aug = hstack(a, matrix<F>::identity(n, F(1)));
    const auto pivots = field_rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

namespace detail {

// One fraction-free (Bareiss) elimination pass over the Laurent polynomial
// ring. Pivots are chosen first-nonzero in row-major order; column swaps are
// fine because only rank, and the determinant up to tracked sign, are used.
struct bareiss_result {
    std::size_t rank;
    laurent_poly last_pivot;
    int sign;
};

inline bareiss_result bareiss_eliminate(matrix<laurent_poly> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    laurent_poly prev = laurent_poly::constant(0, gaussian_rational(1));
    laurent_poly pivot_value = prev;
    int sign = 1;
    std::size_t step = 0;
    while (step < rows && step < cols) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = step; i < rows && pi == rows; ++i) {
            for (std::size_t j = step; j < cols; ++j) {
                if (!m(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rows) break;
        if (pi != step) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(step, j), m(pi, j));
            sign = -sign;
        }
        if (pj != step) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, step), m(i, pj));
            sign = -sign;
        }
        const laurent_poly& p = m(step, step);
        for (std::size_t i = step + 1; i < rows; ++i) {
            for (std::size_t j = step + 1; j < cols; ++j) {
                laurent_poly t = p * m(i, j) - m(i, step) * m(step, j);
                m(i, j) = t.is_zero() ? std::move(t) : t.divide_exact(prev);
            }
            m(i, step) = laurent_poly(p.vars());
        }
        pivot_value = p;
        prev = p;
        ++step;
    }
    return {step, pivot_value, sign};
}

} // namespace detail

inline std::size_t rank_exact(const matrix<laurent_poly>& m) {
    return detail::bareiss_eliminate(m).rank;
}

inline laurent_poly det_exact(const matrix<laurent_poly>& m) {
    if (m.rows() != m.cols()) throw non_square();
    if (m.rows() == 0) return laurent_poly::constant(0, gaussian_rational(1));
    // Triangular matrices (diagonal witness matrices in particular) skip the
    // elimination: the Bareiss pivot products would square the entry sizes
    // only to divide them back out.
    bool lower = true, upper = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) upper = false;
            if (!m(j, i).is_zero()) lower = false;
        }
    }
    if (lower || upper) {
        laurent_poly det = laurent_poly::constant(0, gaussian_rational(1));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, i).is_zero()) return laurent_poly(m(0, 0).vars());
            det *= m(i, i);
        }
        return det;
    }
    const auto res = detail::bareiss_eliminate(m);
    if (res.rank < m.rows()) return laurent_poly(m(0, 0).vars());
    return res.sign < 0 ? -res.last_pivot : res.last_pivot;
}

// Rank over the field of rational functions. Each row is scaled by the
// product of its denominators (a nonzero field element, so rank is
// preserved) and the result is handed to the fraction-free elimination.
inline std::size_t rank_exact(const matrix<rational_function>& m) {
    matrix<laurent_poly> cleared(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        laurent_poly row_den = laurent_poly::constant(0, gaussian_rational(1));
        for (std::size_t j = 0; j < m.cols(); ++j) row_den *= m(i, j).den();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cleared(i, j) = m(i, j).num() * row_den.divide_exact(m(i, j).den());
        }
    }
    return rank_exact(cleared);
}

} // namespace l2lab

#endif
