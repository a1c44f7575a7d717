// Degree types for gradings.
//
// Concrete gradings assign an integer to each arrow.  Symbolic computations
// (layer tables, graded Hom with free parameters) use SymDeg: an integer
// vector holding coordinates with respect to a basis of the homogeneity
// lattice, so "affine expression in the arrow degrees modulo the relation
// constraints" becomes exact vector arithmetic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqa/intlattice.hpp"
#include "gqa/quiver.hpp"

namespace gqa {

struct SymDeg {
    IVec c;

    friend SymDeg operator+(const SymDeg& a, const SymDeg& b) {
        SymDeg r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend SymDeg operator-(const SymDeg& a, const SymDeg& b) { return a + (b * -1); }
    friend SymDeg operator*(const SymDeg& a, i64 k) {
        SymDeg r = a;
        for (auto& x : r.c) x *= k;
        return r;
    }
    friend SymDeg operator*(i64 k, const SymDeg& a) { return a * k; }

    friend bool operator==(const SymDeg& a, const SymDeg& b) {
        size_t n = std::max(a.c.size(), b.c.size());
        for (size_t i = 0; i < n; ++i) {
            i64 x = i < a.c.size() ? a.c[i] : 0;
            i64 y = i < b.c.size() ? b.c[i] : 0;
            if (x != y) return false;
        }
        return true;
    }
    friend bool operator!=(const SymDeg& a, const SymDeg& b) { return !(a == b); }
    friend bool operator<(const SymDeg& a, const SymDeg& b) {
        size_t n = std::max(a.c.size(), b.c.size());
        for (size_t i = 0; i < n; ++i) {
            i64 x = i < a.c.size() ? a.c[i] : 0;
            i64 y = i < b.c.size() ? b.c[i] : 0;
            if (x != y) return x < y;
        }
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

template <class D>
struct DegTraits;

template <>
struct DegTraits<i64> {
    static i64 zero() { return 0; }
    static std::string str(i64 d) { return std::to_string(d); }
};

template <>
struct DegTraits<SymDeg> {
    static SymDeg zero() { return SymDeg{}; }
    static std::string str(const SymDeg& d) { return d.str(); }
};

// Arrow-degree assignment; vertices are implicitly in degree 0.
template <class D>
struct DegreeMap {
    std::vector<D> deg;  // indexed by arrow id

    static DegreeMap zero(size_t n_arrows) {
        return DegreeMap{std::vector<D>(n_arrows, DegTraits<D>::zero())};
    }

    D of_path(const Path& p) const {
        D d = DegTraits<D>::zero();
        for (int32_t a : p.arrows) d = d + deg[a];
        return d;
    }
};

using IntDegrees = DegreeMap<i64>;
using SymDegrees = DegreeMap<SymDeg>;

}  // namespace gqa
