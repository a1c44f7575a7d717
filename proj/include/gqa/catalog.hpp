// The dihedral-block families: quivers, relations, and known profiles.
//
// Families (one per Morita class, parameters r and, for the two-simple
// families, a scalar c in {0,1}):
//   A_r, B_r, C_r          three simple modules
//   D2A^{r,c}, D2B^{r,c}   two simple modules
//   D1C^r                  one simple module
// C_1 is the same algebra as A_1 and is aliased.

#pragma once

#include <optional>
#include <string>

#include "gqa/rewrite.hpp"

namespace gqa {

enum class Family { A, B, C, D2A, D2B, D1C };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D2A: return "D2A";
        case Family::D2B: return "D2B";
        case Family::D1C: return "D1C";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D2A, Family::D2B, Family::D1C})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

struct BlockId {
    Family family;
    int r = 1;
    int c = 0;  // only meaningful for D2A / D2B

    bool has_scalar() const { return family == Family::D2A || family == Family::D2B; }
    std::string str() const {
        std::string s = family_name(family);
        s += "_" + std::to_string(r);
        if (has_scalar()) s += "^" + std::to_string(c);
        return s;
    }
};

struct KnownProfile {
    bool has_nontrivial_grading;
    bool positive;
    bool tight;
    int torus_rank;
};

// The summary-table row for a block: ground truth used as the golden oracle.
inline KnownProfile known_profile(const BlockId& id) {
    switch (id.family) {
        case Family::A: return {true, true, true, 2};
        case Family::B: return {true, true, id.r == 1, 2};
        case Family::C: return {true, true, id.r == 1 || id.r == 4, 2};
        case Family::D2A:
            if (id.c == 0) return {true, true, true, 2};
            return {true, id.r <= 2, false, 1};
        case Family::D2B:
            if (id.c == 0) return {true, true, id.r == 3, 2};
            return {true, true, false, 1};
        case Family::D1C: return {true, true, true, 2};
    }
    throw Error("unknown family");
}

namespace catalog_detail {

struct Builder {
    Quiver q;
    int fm;
    std::vector<Relation> rels;

    int v(const std::string& name) {
        q.vertices.push_back(name);
        return static_cast<int>(q.vertices.size()) - 1;
    }
    int a(const std::string& name, int s, int t) {
        q.arrows.push_back({name, s, t});
        return static_cast<int>(q.arrows.size()) - 1;
    }
    FElem word(std::initializer_list<int> arrows) {
        Path p;
        p.src = q.arrows[*arrows.begin()].src;
        p.tgt = q.arrows[*(arrows.end() - 1)].tgt;
        for (int x : arrows) p.arrows.push_back(x);
        return elem_of_path(p, Fq::one(fm));
    }
    FElem power(std::initializer_list<int> arrows, int n) {
        Path p;
        p.src = q.arrows[*arrows.begin()].src;
        p.tgt = q.arrows[*(arrows.end() - 1)].tgt;
        for (int i = 0; i < n; ++i)
            for (int x : arrows) p.arrows.push_back(x);
        return elem_of_path(p, Fq::one(fm));
    }
    void rel(FElem l, FElem r) { rels.push_back({std::move(l), std::move(r)}); }
    void rel0(FElem l) { rels.push_back({std::move(l), FElem{}}); }
};

}  // namespace catalog_detail

inline Presentation make_block(const BlockId& id, int field_m = 1) {
    using catalog_detail::Builder;
    int r = id.r;
    if (r < 1) throw Error("block parameter r must be positive");
    if (id.has_scalar() && id.c != 0 && id.c != 1) throw Error("scalar c must be 0 or 1");
    size_t guard = static_cast<size_t>(8 * r + 8);
    Builder b;
    b.fm = field_m;

    switch (id.family) {
        case Family::C:
            if (r == 1) return make_block({Family::A, 1, 0}, field_m);  // C_1 = A_1
            {
                b.v("1"), b.v("2"), b.v("3");
                int a1 = b.a("a1", 0, 1), a2 = b.a("a2", 1, 2);
                int b1 = b.a("b1", 1, 0), b2 = b.a("b2", 2, 1);
                int c = b.a("c", 2, 2);
                b.rel0(b.word({a1, b1}));
                b.rel0(b.word({b2, a2}));
                b.rel0(b.word({a2, c}));
                b.rel0(b.word({c, b2}));
                b.rel(b.power({c}, r), b.word({b2, b1, a1, a2}));
                b.rel(b.word({a2, b2, b1, a1}), b.word({b1, a1, a2, b2}));
            }
            break;
        case Family::A: {
            b.v("1"), b.v("2"), b.v("3");
            int a1 = b.a("a1", 0, 1), a2 = b.a("a2", 1, 0);
            int b1 = b.a("b1", 0, 2), b2 = b.a("b2", 2, 0);
            b.rel0(b.word({a2, a1}));
            b.rel0(b.word({b2, b1}));
            b.rel(b.power({a1, a2, b1, b2}, r), b.power({b1, b2, a1, a2}, r));
        } break;
        case Family::B: {
            b.v("1"), b.v("2"), b.v("3");
            int c1 = b.a("c1", 0, 1), c2 = b.a("c2", 1, 2), c3 = b.a("c3", 2, 0);
            int d1 = b.a("d1", 1, 0), d2 = b.a("d2", 2, 1), d3 = b.a("d3", 0, 2);
            b.rel0(b.word({c1, c2}));
            b.rel0(b.word({c2, c3}));
            b.rel0(b.word({c3, c1}));
            b.rel0(b.word({d1, d3}));
            b.rel0(b.word({d3, d2}));
            b.rel0(b.word({d2, d1}));
            b.rel(b.word({c1, d1}), b.word({d3, c3}));
            b.rel(b.word({d1, c1}), b.power({c2, d2}, r));
            b.rel(b.word({c3, d3}), b.power({d2, c2}, r));
        } break;
        case Family::D2A: {
            b.v("0"), b.v("1");
            int al = b.a("alpha", 0, 0), be = b.a("beta", 0, 1), ga = b.a("gamma", 1, 0);
            b.rel0(b.word({ga, be}));
            if (id.c == 0) b.rel0(b.word({al, al}));
            else b.rel(b.word({al, al}), b.power({al, be, ga}, r));
            b.rel(b.power({al, be, ga}, r), b.power({be, ga, al}, r));
        } break;
        case Family::D2B: {
            b.v("0"), b.v("1");
            int al = b.a("alpha", 0, 0), be = b.a("beta", 0, 1), ga = b.a("gamma", 1, 0);
            int et = b.a("eta", 1, 1);
            b.rel0(b.word({be, et}));
            b.rel0(b.word({et, ga}));
            b.rel0(b.word({ga, be}));
            b.rel(b.word({al, be, ga}), b.word({be, ga, al}));
            if (id.c == 0) b.rel0(b.word({al, al}));
            else b.rel(b.word({al, al}), b.word({al, be, ga}));
            b.rel(b.word({ga, al, be}), b.power({et}, r));
        } break;
        case Family::D1C: {
            b.v("1");
            int al = b.a("a", 0, 0), be = b.a("b", 0, 0);
            b.rel0(b.word({al, al}));
            b.rel0(b.word({be, be}));
            b.rel(b.power({al, be}, r), b.power({be, al}, r));
        } break;
    }
    return Presentation::complete(std::move(b.q), std::move(b.rels), field_m, guard);
}

// Dimensions of the projective indecomposables, as read off the reference
// layer structures; used as an oracle layer independent of the engine.
inline std::vector<i64> reference_projective_dims(const BlockId& id) {
    i64 r = id.r;
    switch (id.family) {
        case Family::A: return {8 * r, 4 * r + 1, 4 * r + 1};
        case Family::B: return {4, 2 * r + 2, 2 * r + 2};
        case Family::C:
            if (r == 1) return reference_projective_dims({Family::A, 1, 0});
            return {5, 8, r + 4};
        case Family::D2A: return {6 * r, 3 * r + 1};
        case Family::D2B: return {6, r + 3};
        case Family::D1C: return {4 * r};
    }
    throw Error("unknown family");
}

inline i64 reference_dimension(const BlockId& id) {
    i64 s = 0;
    for (i64 d : reference_projective_dims(id)) s += d;
    return s;
}

}  // namespace gqa
