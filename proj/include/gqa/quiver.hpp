// Quivers, paths, and exact linear combinations of paths.
//
// Composition is left-to-right: p*q means "traverse p, then q", so p*q is
// defined when target(p) == source(q).  Length-0 paths are the vertex
// idempotents e_v.  Elements are finite maps path -> nonzero coefficient;
// the coefficient type is a template parameter so the same arithmetic works
// over GF(2^m) and over polynomial rings used by the tightness checker.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqa/field.hpp"

namespace gqa {

struct Arrow {
    std::string name;
    int src;
    int tgt;
};

struct Quiver {
    std::vector<std::string> vertices;  // declaration order fixes indexing
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& v) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        return -1;
    }
    int arrow_index(const std::string& a) const {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == a) return static_cast<int>(i);
        return -1;
    }
    size_t n_vertices() const { return vertices.size(); }
    size_t n_arrows() const { return arrows.size(); }

    bool has_parallel_arrows() const {
        for (size_t i = 0; i < arrows.size(); ++i)
            for (size_t j = i + 1; j < arrows.size(); ++j)
                if (arrows[i].src == arrows[j].src && arrows[i].tgt == arrows[j].tgt)
                    return true;
        return false;
    }
};

// A path: arrow indices in traversal order; empty = vertex idempotent.
struct Path {
    int src = 0;
    int tgt = 0;
    std::vector<int32_t> arrows;

    size_t length() const { return arrows.size(); }
    bool is_vertex() const { return arrows.empty(); }

    static Path vertex(int v) { return Path{v, v, {}}; }
    static Path arrow(const Quiver& q, int a) {
        return Path{q.arrows[a].src, q.arrows[a].tgt, {static_cast<int32_t>(a)}};
    }
};

// Length-first, then lexicographic by arrow indices; vertex paths compare by
// vertex.  This is the reduction order used by the rewriting engine and the
// key order inside elements.
inline int path_cmp(const Path& p, const Path& q) {
    if (p.length() != q.length()) return p.length() < q.length() ? -1 : 1;
    for (size_t i = 0; i < p.length(); ++i)
        if (p.arrows[i] != q.arrows[i]) return p.arrows[i] < q.arrows[i] ? -1 : 1;
    if (p.is_vertex() && p.src != q.src) return p.src < q.src ? -1 : 1;
    return 0;
}

struct PathLess {
    bool operator()(const Path& p, const Path& q) const { return path_cmp(p, q) < 0; }
};

inline bool operator==(const Path& p, const Path& q) { return path_cmp(p, q) == 0; }
inline bool operator!=(const Path& p, const Path& q) { return path_cmp(p, q) != 0; }

inline std::optional<Path> compose(const Path& p, const Path& q) {
    if (p.tgt != q.src) return std::nullopt;
    Path r;
    r.src = p.src;
    r.tgt = q.tgt;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

inline std::string path_str(const Quiver& q, const Path& p) {
    if (p.is_vertex()) return "e_" + q.vertices[p.src];
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Elements of the path algebra with coefficients in C.

template <class C>
struct Elem {
    std::map<Path, C, PathLess> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const Path& p, const C& c) {
        if (c.is_zero()) return;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend Elem operator+(const Elem& x, const Elem& y) {
        Elem r(x);
        for (const auto& [p, c] : y.terms) r.add_term(p, c);
        return r;
    }
    Elem& operator+=(const Elem& y) { return *this = *this + y; }
    friend Elem operator-(const Elem& x, const Elem& y) { return x + y; }  // char 2

    // The leading (largest) path, if any.
    const Path* lead() const { return terms.empty() ? nullptr : &terms.rbegin()->first; }
};

template <class C>
Elem<C> elem_scale(const Elem<C>& x, const C& c) {
    Elem<C> r;
    if (c.is_zero()) return r;
    for (const auto& [p, a] : x.terms) r.add_term(p, a * c);
    return r;
}

template <class C>
Elem<C> elem_of_path(const Path& p, const C& one) {
    Elem<C> r;
    r.add_term(p, one);
    return r;
}

// Free product (before any rewriting): bilinear extension of composition,
// incomposable pairs contribute zero.
template <class C>
Elem<C> elem_mul(const Elem<C>& x, const Elem<C>& y) {
    Elem<C> r;
    for (const auto& [p, a] : x.terms)
        for (const auto& [q, b] : y.terms)
            if (auto pq = compose(p, q)) r.add_term(*pq, a * b);
    return r;
}

template <class C>
std::string elem_str(const Quiver& qv, const Elem<C>& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : x.terms) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += c.str() + "*";
        s += path_str(qv, p);
    }
    return s;
}

using FElem = Elem<Fq>;

}  // namespace gqa
