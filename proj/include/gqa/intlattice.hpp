// Exact integer lattice computations: Hermite and Smith normal forms,
// kernel lattices, membership, canonical quotient coordinates, and a small
// Fourier-Motzkin feasibility solver over the rationals.
//
// All matrices here are tiny (arrows x relations of a bound quiver algebra),
// so the classical algorithms are used directly with int64 entries and
// __int128 intermediates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gqa/field.hpp"

namespace gqa {

using i64 = long long;
using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;

inline IVec iadd(const IVec& a, const IVec& b) {
    IVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline IVec isub(const IVec& a, const IVec& b) {
    IVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
inline IVec iscale(const IVec& a, i64 c) {
    IVec r(a);
    for (auto& x : r) x *= c;
    return r;
}
inline bool izero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

// Row-style Hermite normal form of the lattice spanned by `rows`.
// Result: echelon basis with positive pivots, entries above each pivot
// reduced into [0, pivot).  Zero rows are dropped.
inline IMat hnf(IMat rows) {
    if (rows.empty()) return rows;
    size_t n = rows[0].size();
    IMat basis;
    size_t done_cols = 0;
    while (true) {
        // Find the leftmost column with a nonzero entry among remaining rows.
        size_t col = n;
        for (size_t c = done_cols; c < n && col == n; ++c)
            for (const auto& r : rows)
                if (r[c] != 0) { col = c; break; }
        if (col == n) break;
        // Euclidean reduction in this column.
        while (true) {
            int best = -1;
            for (size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best < 0 || std::abs(rows[i][col]) < std::abs(rows[best][col])))
                    best = static_cast<int>(i);
            if (best < 0) break;
            i64 p = rows[best][col];
            bool reduced_all = true;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) == best || rows[i][col] == 0) continue;
                i64 q = rows[i][col] / p;
                rows[i] = isub(rows[i], iscale(rows[best], q));
                if (rows[i][col] != 0) reduced_all = false;
            }
            if (reduced_all) {
                IVec pivot_row = rows[best];
                if (pivot_row[col] < 0) pivot_row = iscale(pivot_row, -1);
                rows.erase(rows.begin() + best);
                basis.push_back(std::move(pivot_row));
                break;
            }
        }
        done_cols = col + 1;
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const IVec& r) { return izero(r); }),
                   rows.end());
        if (rows.empty()) break;
    }
    // Reduce entries above pivots.
    for (size_t i = basis.size(); i-- > 0;) {
        size_t p = 0;
        while (basis[i][p] == 0) ++p;
        for (size_t j = 0; j < i; ++j) {
            i64 q = basis[j][p] / basis[i][p];
            if (basis[j][p] % basis[i][p] < 0) --q;  // floor division
            if (q != 0) basis[j] = isub(basis[j], iscale(basis[i], q));
        }
    }
    return basis;
}

// Reduce v modulo the lattice spanned by an HNF basis; canonical coset rep.
inline IVec hnf_reduce(const IMat& basis, IVec v) {
    for (const auto& row : basis) {
        size_t p = 0;
        while (row[p] == 0) ++p;
        i64 q = v[p] / row[p];
        if (v[p] % row[p] < 0) --q;
        if (q != 0) v = isub(v, iscale(row, q));
    }
    return v;
}

inline bool lattice_contains(const IMat& hnf_basis, const IVec& v) {
    return izero(hnf_reduce(hnf_basis, v));
}

// Integer kernel lattice {x : M x = 0}, returned as an HNF basis of rows x.
// Kernel lattices are saturated by construction.
inline IMat kernel_lattice(const IMat& M, size_t ncols) {
    // Row-reduce [M^T | I]; rows whose M^T part vanishes give the kernel.
    size_t m = M.size();
    IMat work(ncols, IVec(m + ncols, 0));
    for (size_t i = 0; i < ncols; ++i) {
        for (size_t j = 0; j < m; ++j) work[i][j] = M[j][i];
        work[i][m + i] = 1;
    }
    // Bring the left block into echelon form by unimodular row operations.
    size_t row = 0;
    for (size_t col = 0; col < m && row < work.size(); ++col) {
        while (true) {
            int best = -1;
            for (size_t i = row; i < work.size(); ++i)
                if (work[i][col] != 0 &&
                    (best < 0 || std::abs(work[i][col]) < std::abs(work[best][col])))
                    best = static_cast<int>(i);
            if (best < 0) break;
            std::swap(work[row], work[best]);
            bool clean = true;
            for (size_t i = row + 1; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                i64 q = work[i][col] / work[row][col];
                work[i] = isub(work[i], iscale(work[row], q));
                if (work[i][col] != 0) clean = false;
            }
            if (clean) { ++row; break; }
        }
    }
    IMat ker;
    for (size_t i = row; i < work.size(); ++i) {
        IVec x(work[i].begin() + m, work[i].end());
        if (!izero(x)) ker.push_back(std::move(x));
    }
    return hnf(std::move(ker));
}

// Solve x B = v exactly over the integers (x in terms of B's rows).
inline std::optional<IVec> solve_in_lattice(const IMat& B, const IVec& v) {
    if (B.empty()) return izero(v) ? std::optional<IVec>(IVec{}) : std::nullopt;
    size_t n = B[0].size(), m = B.size();
    IMat work(m, IVec(n + m, 0));
    for (size_t i = 0; i < m; ++i) {
        std::copy(B[i].begin(), B[i].end(), work[i].begin());
        work[i][n + i] = 1;
    }
    IMat h = hnf(std::move(work));
    IVec t(v);
    IVec coord(m, 0);
    for (const auto& row : h) {
        size_t p = 0;
        while (p < n && row[p] == 0) ++p;
        if (p == n) continue;
        if (t[p] % row[p] != 0) continue;  // may still clear via later rows? no: echelon
        i64 q = t[p] / row[p];
        if (q != 0) {
            for (size_t j = 0; j < n; ++j) t[j] -= q * row[j];
            for (size_t j = 0; j < m; ++j) coord[j] += q * row[j + n];
        }
    }
    if (!izero(t)) return std::nullopt;
    return coord;
}

// ---------------------------------------------------------------------------
// Smith normal form with transforms: U * A * V = D (diagonal).
struct Snf {
    IMat U, V, D;          // U: m x m, V: n x n, D: m x n diagonal
    IMat Vinv;             // inverse of V, maintained alongside
    std::vector<i64> diag; // invariant factors (nonzero ones first)
};

inline Snf smith_normal_form(IMat A, size_t ncols) {
    size_t m = A.size(), n = ncols;
    Snf s;
    s.U.assign(m, IVec(m, 0));
    s.V.assign(n, IVec(n, 0));
    s.Vinv.assign(n, IVec(n, 0));
    for (size_t i = 0; i < m; ++i) s.U[i][i] = 1;
    for (size_t i = 0; i < n; ++i) s.V[i][i] = s.Vinv[i][i] = 1;
    if (A.empty()) { s.D = A; return s; }

    auto row_op = [&](size_t i, size_t j, i64 q) {  // row_i -= q * row_j
        A[i] = isub(A[i], iscale(A[j], q));
        s.U[i] = isub(s.U[i], iscale(s.U[j], q));
    };
    auto col_op = [&](size_t i, size_t j, i64 q) {  // col_i -= q * col_j
        for (size_t r = 0; r < m; ++r) A[r][i] -= q * A[r][j];
        // V tracks column ops (A' = A V): col_i(V) -= q col_j(V)
        for (size_t r = 0; r < n; ++r) s.V[r][i] -= q * s.V[r][j];
        // Vinv: row_j += q * row_i
        s.Vinv[j] = iadd(s.Vinv[j], iscale(s.Vinv[i], q));
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(A[i], A[j]);
        std::swap(s.U[i], s.U[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < m; ++r) std::swap(A[r][i], A[r][j]);
        for (size_t r = 0; r < n; ++r) std::swap(s.V[r][i], s.V[r][j]);
        std::swap(s.Vinv[i], s.Vinv[j]);
    };

    size_t t = 0;
    while (t < m && t < n) {
        // Find a nonzero pivot in the remaining block.
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (A[i][j] != 0 && (pi == m || std::abs(A[i][j]) < std::abs(A[pi][pj]))) {
                    pi = i; pj = j;
                }
        if (pi == m) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < m; ++i)
                if (A[i][t] != 0) {
                    i64 q = A[i][t] / A[t][t];
                    row_op(i, t, q);
                    if (A[i][t] != 0) { row_swap(t, i); clean = false; }
                }
            for (size_t j = t + 1; j < n; ++j)
                if (A[t][j] != 0) {
                    i64 q = A[t][j] / A[t][t];
                    col_op(j, t, q);
                    if (A[t][j] != 0) { col_swap(t, j); clean = false; }
                }
        }
        if (A[t][t] < 0) {
            A[t] = iscale(A[t], -1);
            s.U[t] = iscale(s.U[t], -1);
        }
        ++t;
    }
    // Fix divisibility chain d1 | d2 | ...
    for (size_t i = 0; i + 1 < t; ++i) {
        for (size_t j = i + 1; j < t; ++j) {
            if (A[j][j] % A[i][i] == 0) continue;
            // Standard trick: add column j to column i, re-reduce the 2x2 block.
            col_op(i, j, -1);
            while (A[j][i] != 0 || A[i][j] != 0 || A[j][j] % A[i][i] != 0) {
                if (A[j][i] == 0 && A[i][j] == 0) break;
                if (A[j][i] != 0) {
                    i64 q = A[j][i] / A[i][i];
                    row_op(j, i, q);
                    if (A[j][i] != 0) { row_swap(i, j); continue; }
                }
                if (A[i][j] != 0) {
                    i64 q = A[i][j] / A[i][i];
                    col_op(j, i, q);
                    if (A[i][j] != 0) { col_swap(i, j); continue; }
                }
            }
            if (A[i][i] < 0) { A[i] = iscale(A[i], -1); s.U[i] = iscale(s.U[i], -1); }
            if (A[j][j] < 0) { A[j] = iscale(A[j], -1); s.U[j] = iscale(s.U[j], -1); }
        }
    }
    s.D = std::move(A);
    for (size_t i = 0; i < t; ++i) s.diag.push_back(s.D[i][i]);
    return s;
}

// ---------------------------------------------------------------------------
// Exact Fourier-Motzkin feasibility for { t : C t >= d } over the rationals.
// Returns a rational witness scaled to integers, or nullopt if infeasible.
// Sizes are tiny (<= 6 variables, <= 12 constraints).

namespace fm_detail {
struct Row {
    IVec c;  // coefficients
    i64 d;   // rhs: c . t >= d
};

inline i64 igcd(i64 a, i64 b) { return std::gcd(std::abs(a), std::abs(b)); }

inline void normalize(Row& r) {
    i64 g = std::abs(r.d);
    for (i64 x : r.c) g = igcd(g, x);
    if (g > 1) {
        for (auto& x : r.c) x /= g;
        r.d /= g;
    }
}
}  // namespace fm_detail

inline std::optional<IVec> fm_feasible(const IMat& C, const IVec& d) {
    using fm_detail::Row;
    size_t n = C.empty() ? 0 : C[0].size();
    std::vector<std::vector<Row>> levels;  // constraints alive before eliminating var k
    std::vector<Row> cur;
    for (size_t i = 0; i < C.size(); ++i) cur.push_back(Row{C[i], d[i]});

    for (size_t var = 0; var < n; ++var) {
        levels.push_back(cur);
        std::vector<Row> next;
        std::vector<Row> pos, neg;
        for (auto& r : cur) {
            if (r.c[var] > 0) pos.push_back(r);
            else if (r.c[var] < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // p.c[var] * q - q.c[var] * p eliminates var with positive scaling
                i64 a = p.c[var], b = -q.c[var];
                Row r;
                r.c.assign(n, 0);
                for (size_t j = 0; j < n; ++j) r.c[j] = a * q.c[j] + b * p.c[j];
                r.d = a * q.d + b * p.d;
                fm_detail::normalize(r);
                next.push_back(std::move(r));
            }
        cur = std::move(next);
    }
    for (const auto& r : cur)
        if (r.d > 0) return std::nullopt;  // 0 >= d with d > 0

    // Back-substitute a rational witness t = num/den (common denominator).
    IVec num(n, 0);
    i64 den = 1;
    for (size_t var = n; var-- > 0;) {
        // Bounds on t_var given t_{var+1..}: c[var] * t_var >= d - rest
        bool has_lo = false, has_hi = false;
        // lo, hi as fractions over common denominator
        __int128 lo_num = 0, hi_num = 0;
        i64 lo_den = 1, hi_den = 1;
        for (const auto& r : levels[var]) {
            if (r.c[var] == 0) continue;
            __int128 rest = static_cast<__int128>(r.d) * den;
            for (size_t j = var + 1; j < n; ++j)
                rest -= static_cast<__int128>(r.c[j]) * num[j];
            // r.c[var] * t_var >= rest/den
            if (r.c[var] > 0) {
                __int128 cand_num = rest;
                i64 cand_den = den * r.c[var];
                if (!has_lo || cand_num * lo_den > lo_num * cand_den) {
                    lo_num = cand_num; lo_den = cand_den; has_lo = true;
                }
            } else {
                __int128 cand_num = rest;
                i64 cand_den = den * r.c[var];  // negative
                // t_var <= rest / (den * c) with c < 0 flips the inequality
                __int128 cn = -cand_num;
                i64 cd = -cand_den;
                if (!has_hi || cn * hi_den < hi_num * cd) {
                    hi_num = cn; hi_den = cd; has_hi = true;
                }
            }
        }
        // Choose a value: prefer an integer within the bounds.
        __int128 val_num;
        i64 val_den;
        if (has_lo) {
            // ceil(lo)
            __int128 q = lo_num >= 0 ? (lo_num + lo_den - 1) / lo_den : -((-lo_num) / lo_den);
            if (has_hi && q * hi_den > hi_num) { val_num = lo_num; val_den = lo_den; }
            else { val_num = q; val_den = 1; }
        } else if (has_hi) {
            __int128 q = hi_num >= 0 ? hi_num / hi_den : -(((-hi_num) + hi_den - 1) / hi_den);
            val_num = q; val_den = 1;
        } else {
            val_num = 0; val_den = 1;
        }
        // Merge into the common-denominator representation.
        i64 g = fm_detail::igcd(den, val_den);
        i64 mult = val_den / g;
        for (auto& x : num) x *= mult;
        den *= mult;
        num[var] = static_cast<i64>(val_num * (den / val_den));
    }
    return num;  // witness t = num / den; only used for cones, so scaling is free
}

}  // namespace gqa
