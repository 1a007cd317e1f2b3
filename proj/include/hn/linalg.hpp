#pragma once

#include <optional>

#include "hn/rational.hpp"

namespace hn {

/* Exact rational Gaussian elimination utilities on small dense matrices. */

inline QMat q_identity(size_t n) {
    QMat m(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
    QVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline IVec mat_vec(const IMat& m, const IVec& v) {
    IVec r(m.size(), Int(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

/* Solve M x = rhs for square invertible M. Returns nullopt when singular. */
inline std::optional<QVec> solve_square(QMat m, QVec rhs) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat d = m[col][col];
        for (size_t j = col; j < n; ++j) m[col][j] /= d;
        rhs[col] /= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

/* Coefficients of target in the span of (independent) basis vectors of
   length n; nullopt when target lies outside the span. */
inline std::optional<QVec> solve_in_span(const std::vector<IVec>& basis, const QVec& target) {
    size_t m = basis.size();
    size_t n = target.size();
    if (m == 0) return is_zero(target) ? std::optional<QVec>(QVec{}) : std::nullopt;
    /* Augmented n x (m+1) system basis^T * x = target. */
    QMat a(n, QVec(m + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) a[i][j] = Rat(basis[j][i]);
        a[i][m] = target[i];
    }
    size_t row = 0;
    std::vector<size_t> pivot_of_col(m, SIZE_MAX);
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        Rat d = a[row][col];
        for (size_t j = col; j <= m; ++j) a[row][j] /= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = col; j <= m; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (size_t r = row; r < n; ++r)
        if (a[r][m] != 0) return std::nullopt;
    QVec x(m, Rat(0));
    for (size_t col = 0; col < m; ++col)
        if (pivot_of_col[col] != SIZE_MAX) x[col] = a[pivot_of_col[col]][m];
    return x;
}

inline std::optional<QVec> solve_in_span(const std::vector<IVec>& basis, const IVec& target) {
    return solve_in_span(basis, to_rational(target));
}

/* Basis of { x : rows . x = 0 } for a list of integer row vectors. */
inline std::vector<QVec> nullspace(const std::vector<IVec>& rows, size_t n) {
    size_t m = rows.size();
    QMat a(m, QVec(n, Rat(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(rows[i][j]);
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        Rat d = a[row][col];
        for (size_t j = col; j < n; ++j) a[row][j] /= d;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(n, Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
        basis.push_back(v);
    }
    return basis;
}

/* Smith normal form: U * C * V = D with U, V unimodular and D diagonal
   with successive divisibility. C is n x m. */
struct SmithForm {
    IMat U, Uinv;  // n x n
    IMat V;        // m x m
    IVec divisors; // length min(n, m), trailing zeros when rank deficient
};

inline SmithForm smith_form(IMat c) {
    size_t n = c.size();
    size_t m = n == 0 ? 0 : c[0].size();
    IMat u(n, IVec(n, Int(0))), uinv(n, IVec(n, Int(0))), v(m, IVec(m, Int(0)));
    for (size_t i = 0; i < n; ++i) u[i][i] = uinv[i][i] = 1;
    for (size_t j = 0; j < m; ++j) v[j][j] = 1;

    auto row_swap = [&](size_t a, size_t b) {
        std::swap(c[a], c[b]);
        std::swap(u[a], u[b]);
        for (size_t i = 0; i < n; ++i) std::swap(uinv[i][a], uinv[i][b]);
    };
    auto row_add = [&](size_t dst, size_t src, const Int& f) {
        /* row dst += f * row src; Uinv column src -= f * column dst. */
        for (size_t j = 0; j < m; ++j) c[dst][j] += f * c[src][j];
        for (size_t j = 0; j < n; ++j) u[dst][j] += f * u[src][j];
        for (size_t i = 0; i < n; ++i) uinv[i][src] -= f * uinv[i][dst];
    };
    auto row_negate = [&](size_t a) {
        for (size_t j = 0; j < m; ++j) c[a][j] = -c[a][j];
        for (size_t j = 0; j < n; ++j) u[a][j] = -u[a][j];
        for (size_t i = 0; i < n; ++i) uinv[i][a] = -uinv[i][a];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < n; ++i) std::swap(c[i][a], c[i][b]);
        for (size_t i = 0; i < m; ++i) std::swap(v[i][a], v[i][b]);
    };
    auto col_add = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < n; ++i) c[i][dst] += f * c[i][src];
        for (size_t i = 0; i < m; ++i) v[i][dst] += f * v[i][src];
    };

    size_t t = 0;
    while (t < n && t < m) {
        /* Find a nonzero pivot in the remaining block. */
        size_t pi = SIZE_MAX, pj = SIZE_MAX;
        for (size_t i = t; i < n && pi == SIZE_MAX; ++i)
            for (size_t j = t; j < m; ++j)
                if (c[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == SIZE_MAX) break;
        row_swap(t, pi);
        col_swap(t, pj);
        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (c[i][t] == 0) continue;
                Int q = c[i][t] / c[t][t];
                row_add(i, t, -q);
                if (c[i][t] != 0) {
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (c[t][j] == 0) continue;
                Int q = c[t][j] / c[t][t];
                col_add(j, t, -q);
                if (c[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (c[t][t] < 0) row_negate(t);
        /* Enforce divisibility d_t | c[i][j] for the rest of the block. */
        bool restart = false;
        for (size_t i = t + 1; i < n && !restart; ++i)
            for (size_t j = t + 1; j < m && !restart; ++j)
                if (c[i][j] % c[t][t] != 0) {
                    row_add(t, i, 1);
                    restart = true;
                }
        if (!restart) ++t;
    }

    SmithForm s;
    s.U = std::move(u);
    s.Uinv = std::move(uinv);
    s.V = std::move(v);
    size_t k = std::min(n, m);
    s.divisors.resize(k);
    for (size_t i = 0; i < k; ++i) s.divisors[i] = c[i][i];
    return s;
}

}  // namespace hn
