// Dense exact linear algebra over GF(2^m): row echelon, rank, kernel, solve.
// Matrices are small throughout (dimensions bounded by algebra dimensions),
// so plain Gaussian elimination is all that is needed.

#pragma once

#include <optional>
#include <vector>

#include "gqa/field.hpp"

namespace gqa {

using FVec = std::vector<Fq>;

struct FMat {
    size_t rows = 0, cols = 0;
    std::vector<FVec> a;

    FMat() = default;
    FMat(size_t r, size_t c, Fq fill = Fq()) : rows(r), cols(c), a(r, FVec(c, fill)) {}

    FVec& operator[](size_t i) { return a[i]; }
    const FVec& operator[](size_t i) const { return a[i]; }

    void add_row(FVec v) {
        if (rows == 0) cols = v.size();
        a.push_back(std::move(v));
        ++rows;
    }
};

inline FVec operator+(const FVec& x, const FVec& y) {
    FVec r(x);
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

inline FVec scale(const FVec& x, Fq c) {
    FVec r(x);
    for (auto& e : r) e *= c;
    return r;
}

inline bool is_zero(const FVec& x) {
    for (const auto& e : x)
        if (!e.is_zero()) return false;
    return true;
}

// Row echelon basis of a span, maintained incrementally.
class RowSpan {
  public:
    explicit RowSpan(size_t ncols = 0) : ncols_(ncols) {}

    size_t dim() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }
    const std::vector<FVec>& rows() const { return rows_; }

    // Reduce v against the current basis; returns the residue.
    FVec residue(FVec v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            Fq c = v[pivot_[i]];
            if (!c.is_zero()) v = v + scale(rows_[i], c);
        }
        return v;
    }

    bool contains(const FVec& v) const { return is_zero(residue(v)); }

    // Insert v if independent; returns true if the dimension grew.
    bool add(FVec v) {
        if (ncols_ == 0) ncols_ = v.size();
        v = residue(std::move(v));
        size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        Fq c = v[p].inv();
        v = scale(v, c);
        // Back-substitute to keep the basis reduced.
        for (size_t i = 0; i < rows_.size(); ++i) {
            Fq d = rows_[i][p];
            if (!d.is_zero()) rows_[i] = rows_[i] + scale(v, d);
        }
        size_t pos = 0;
        while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivot_.insert(pivot_.begin() + pos, p);
        return true;
    }

    // Coordinates of v in terms of the original generators are not tracked;
    // use solve() below when a preimage is required.

  private:
    size_t ncols_;
    std::vector<FVec> rows_;
    std::vector<size_t> pivot_;
};

inline size_t rank(const FMat& M) {
    RowSpan s(M.cols);
    for (const auto& r : M.a) s.add(r);
    return s.dim();
}

// Kernel basis of M (as row vectors x with x*M = 0 is NOT what we want here;
// this is the usual right kernel: vectors v with M v = 0).
inline std::vector<FVec> kernel(const FMat& M, int field_m) {
    size_t n = M.cols;
    Fq zero = Fq::zero(field_m), one = Fq::one(field_m);
    // Gaussian elimination on a working copy, tracking pivot columns.
    std::vector<FVec> w(M.a);
    std::vector<int> pivot_of_col(n, -1);
    size_t prow = 0;
    for (size_t col = 0; col < n && prow < w.size(); ++col) {
        size_t sel = prow;
        while (sel < w.size() && w[sel][col].is_zero()) ++sel;
        if (sel == w.size()) continue;
        std::swap(w[prow], w[sel]);
        Fq c = w[prow][col].inv();
        w[prow] = scale(w[prow], c);
        for (size_t i = 0; i < w.size(); ++i)
            if (i != prow && !w[i][col].is_zero()) w[i] = w[i] + scale(w[prow], w[i][col]);
        pivot_of_col[col] = static_cast<int>(prow);
        ++prow;
    }
    std::vector<FVec> ker;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        FVec v(n, zero);
        v[col] = one;
        for (size_t c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = w[pivot_of_col[c2]][col];
        ker.push_back(std::move(v));
    }
    return ker;
}

// Solve x * M = b for a row vector x (coordinates in terms of M's rows).
inline std::optional<FVec> solve_left(const FMat& M, const FVec& b, int field_m) {
    size_t nr = M.rows, nc = M.cols;
    Fq zero = Fq::zero(field_m), one = Fq::one(field_m);
    // Augment rows with identity tags and eliminate.
    std::vector<FVec> w;
    for (size_t i = 0; i < nr; ++i) {
        FVec row = M.a[i];
        row.resize(nc + nr, zero);
        row[nc + i] = one;
        w.push_back(std::move(row));
    }
    FVec target = b;
    target.resize(nc + nr, zero);
    RowSpan span(nc + nr);
    for (auto& row : w) span.add(std::move(row));
    // Reduce the target only on the first nc columns.
    FVec t = target;
    for (const auto& r : span.rows()) {
        size_t p = 0;
        while (p < nc && r[p].is_zero()) ++p;
        if (p == nc) continue;
        Fq c = t[p];
        if (!c.is_zero()) t = t + scale(r, c);
    }
    for (size_t j = 0; j < nc; ++j)
        if (!t[j].is_zero()) return std::nullopt;
    FVec x(nr, zero);
    for (size_t i = 0; i < nr; ++i) x[i] = t[nc + i];
    return x;
}

}  // namespace gqa
