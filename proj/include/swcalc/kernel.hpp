#pragma once

#include <vector>

#include "swcalc/lattice.hpp"

namespace swcalc {

using IntMatrix = std::vector<std::vector<Int>>;

// Basis of the integer solutions of M v = 0, computed by unimodular column
// reduction: U starts as the identity, column operations bring M to column
// echelon form, and the U-columns under the vanished M-columns span the
// kernel. Kernels of integer matrices are primitive sublattices, so the basis
// generates every integer solution.
inline std::vector<ClassVec> integer_kernel(const IntMatrix& m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw CalcError("integer_kernel: ragged matrix");
    if (cols == 0) return {};

    IntMatrix a = m;
    IntMatrix u(cols, ClassVec(cols, Int(0)));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        if (q == 0) return;
        for (size_t r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
        for (size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < cols; ++r) std::swap(u[r][i], u[r][j]);
    };

    size_t fixed = 0;  // columns that already hold a pivot
    for (size_t r = 0; r < rows && fixed < cols; ++r) {
        // gcd-reduce row r across the active columns until one entry is left
        while (true) {
            size_t best = cols;
            for (size_t c = fixed; c < cols; ++c)
                if (a[r][c] != 0 && (best == cols || abs_int(a[r][c]) < abs_int(a[r][best])))
                    best = c;
            if (best == cols) break;  // row is zero on active columns
            bool others = false;
            for (size_t c = fixed; c < cols; ++c) {
                if (c == best || a[r][c] == 0) continue;
                col_sub(c, best, floor_div(a[r][c], a[r][best]));
                if (a[r][c] != 0) others = true;
            }
            if (!others) {
                col_swap(fixed, best);
                ++fixed;
                break;
            }
        }
    }

    std::vector<ClassVec> basis;
    for (size_t c = fixed; c < cols; ++c) {
        ClassVec v(cols);
        for (size_t r = 0; r < cols; ++r) v[r] = u[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int integer_det(const IntMatrix& m) {
    const size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw CalcError("integer_det: matrix not square");
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace detail {
inline IntMatrix minor_of(const IntMatrix& m, size_t di, size_t dj) {
    const size_t n = m.size();
    IntMatrix r;
    r.reserve(n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (i == di) continue;
        ClassVec row;
        row.reserve(n - 1);
        for (size_t j = 0; j < n; ++j)
            if (j != dj) row.push_back(m[i][j]);
        r.push_back(std::move(row));
    }
    return r;
}
}  // namespace detail

// Adjugate (transposed cofactor matrix): adj(M) * M = det(M) * I. Sizes here
// stay tiny, so cofactor expansion is fine.
inline IntMatrix adjugate_matrix(const IntMatrix& m) {
    const size_t n = m.size();
    IntMatrix adj(n, ClassVec(n, Int(0)));
    if (n == 0) return adj;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int c = integer_det(detail::minor_of(m, i, j));
            adj[j][i] = ((i + j) % 2 == 0) ? c : Int(-c);
        }
    return adj;
}

}  // namespace swcalc
