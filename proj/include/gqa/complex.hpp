// Bounded complexes of shifted projectives and graded Hom in the homotopy
// category.
//
// A summand P_v<s> in homological position h maps to P_w<t> by right
// multiplication with an element of e_v A e_w; as a graded map this has
// internal degree deg(path) + s - t.  Differentials must be internally
// degree 0 and square to zero.  Hom_{K^b}(X, Y) in homological degree 0 is
// computed per internal degree as (chain maps) / (null-homotopic maps) by
// exact linear algebra over the coefficient field.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gqa/degrees.hpp"
#include "gqa/linalg.hpp"
#include "gqa/rewrite.hpp"

namespace gqa {

template <class D>
struct Summand {
    int vertex;
    D shift;
};

template <class D>
struct GradedComplex {
    // homological position -> summand list; diff[h]: X^h -> X^{h+1}
    std::map<int, std::vector<Summand<D>>> terms;
    std::map<int, std::vector<std::vector<FElem>>> diff;

    const std::vector<Summand<D>>* at(int h) const {
        auto it = terms.find(h);
        return it == terms.end() ? nullptr : &it->second;
    }
    const std::vector<std::vector<FElem>>* d(int h) const {
        auto it = diff.find(h);
        return it == diff.end() ? nullptr : &it->second;
    }
};

template <class D>
GradedComplex<D> stalk_complex(int vertex, int h = 0, D shift = DegTraits<D>::zero()) {
    GradedComplex<D> x;
    x.terms[h] = {Summand<D>{vertex, shift}};
    return x;
}

// Structural and degree checks; returns human-readable violations.
template <class D>
std::vector<std::string> validate(const GradedComplex<D>& X, const Presentation& pres,
                                  const DegreeMap<D>& dm) {
    std::vector<std::string> bad;
    for (const auto& [h, mat] : X.diff) {
        const auto* src = X.at(h);
        const auto* tgt = X.at(h + 1);
        if (!src || !tgt) {
            bad.push_back("differential at position " + std::to_string(h) +
                          " has missing terms");
            continue;
        }
        if (mat.size() != src->size()) {
            bad.push_back("differential at position " + std::to_string(h) + " has bad shape");
            continue;
        }
        for (size_t a = 0; a < mat.size(); ++a) {
            if (mat[a].size() != tgt->size()) {
                bad.push_back("differential at position " + std::to_string(h) +
                              " has bad shape");
                break;
            }
            for (size_t b = 0; b < mat[a].size(); ++b) {
                for (const auto& [p, c] : mat[a][b].terms) {
                    if (p.src != (*src)[a].vertex || p.tgt != (*tgt)[b].vertex)
                        bad.push_back("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                      ") at position " + std::to_string(h) +
                                      " is not a map between its summands");
                    else if (!(dm.of_path(p) == (*tgt)[b].shift - (*src)[a].shift))
                        bad.push_back("entry " + path_str(pres.quiver, p) + " at position " +
                                      std::to_string(h) + " is not homogeneous of degree 0");
                }
            }
        }
    }
    // d o d = 0
    for (const auto& [h, mat] : X.diff) {
        const auto* next = X.d(h + 1);
        if (!next) continue;
        const auto* tgt2 = X.at(h + 2);
        for (size_t a = 0; a < mat.size(); ++a)
            for (size_t c = 0; tgt2 && c < tgt2->size(); ++c) {
                FElem acc;
                for (size_t b = 0; b < (*next).size(); ++b)
                    acc += elem_mul(mat[a][b], (*next)[b][c]);
                if (!pres.nf(acc).is_zero())
                    bad.push_back("d o d != 0 at position " + std::to_string(h));
            }
    }
    return bad;
}

// A chain map of internal degree delta, stored per homological position as a
// matrix of algebra elements.
template <class D>
struct ChainMap {
    D delta = DegTraits<D>::zero();
    std::map<int, std::vector<std::vector<FElem>>> f;
};

// Compose chain maps X -> Y -> Z ("f then g"); internal degrees add.
template <class D>
ChainMap<D> compose_chain_maps(const Presentation& pres, const GradedComplex<D>& X,
                               const GradedComplex<D>& Y, const GradedComplex<D>& Z,
                               const ChainMap<D>& fm, const ChainMap<D>& gm) {
    ChainMap<D> r;
    r.delta = fm.delta + gm.delta;
    for (const auto& [h, F] : fm.f) {
        auto it = gm.f.find(h);
        if (it == gm.f.end()) continue;
        const auto& G = it->second;
        const auto* xs = X.at(h);
        const auto* zs = Z.at(h);
        if (!xs || !zs) continue;
        std::vector<std::vector<FElem>> M(xs->size(), std::vector<FElem>(zs->size()));
        for (size_t a = 0; a < xs->size(); ++a)
            for (size_t c = 0; c < zs->size(); ++c) {
                FElem acc;
                for (size_t b = 0; b < G.size(); ++b)
                    if (b < F[a].size()) acc += elem_mul(F[a][b], G[b][c]);
                M[a][c] = pres.nf(acc);
            }
        r.f[h] = std::move(M);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hom_{K^b}(X, Y) per internal degree, with representatives.

template <class D>
struct HomSlot {
    D delta;
    // variable = (h, row a, col b, basis path index in pres.basis)
    struct Var {
        int h;
        size_t a, b;
        int path;
    };
    std::vector<Var> vars;
    std::vector<FVec> z_basis;    // chain maps, coordinates over vars
    std::vector<FVec> b_basis;    // null-homotopic chain maps (independent set)
    std::vector<FVec> reps;       // coset representatives extending b_basis
    FMat coord_matrix;            // rows: reps then b_basis

    size_t class_dim() const { return reps.size(); }
};

template <class D>
struct HomSpace {
    // sorted by delta
    std::vector<HomSlot<D>> slots;

    const HomSlot<D>* slot(const D& delta) const {
        for (const auto& s : slots)
            if (s.delta == delta) return &s;
        return nullptr;
    }
    size_t total_class_dim() const {
        size_t n = 0;
        for (const auto& s : slots) n += s.class_dim();
        return n;
    }
    std::vector<D> degree_multiset() const {
        std::vector<D> r;
        for (const auto& s : slots)
            for (size_t i = 0; i < s.class_dim(); ++i) r.push_back(s.delta);
        std::sort(r.begin(), r.end());
        return r;
    }
};

namespace homgr_detail {

template <class D>
std::vector<D> candidate_degrees(const Presentation& pres, const GradedComplex<D>& X,
                                 const GradedComplex<D>& Y, const DegreeMap<D>& dm) {
    std::vector<D> out;
    for (const auto& [h, xs] : X.terms) {
        const auto* ys = Y.at(h);
        if (!ys) continue;
        for (const auto& sx : xs)
            for (const auto& sy : *ys)
                for (const auto& p : pres.basis) {
                    if (p.src != sx.vertex || p.tgt != sy.vertex) continue;
                    D delta = dm.of_path(p) + sx.shift - sy.shift;
                    bool seen = false;
                    for (const auto& d : out)
                        if (d == delta) { seen = true; break; }
                    if (!seen) out.push_back(delta);
                }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace homgr_detail

// Full graded Hom computation: all internal degrees with nonzero chain-map
// spaces, each with class representatives modulo null-homotopies.
template <class D>
HomSpace<D> homgr(const Presentation& pres, const GradedComplex<D>& X,
                  const GradedComplex<D>& Y, const DegreeMap<D>& dm) {
    HomSpace<D> out;
    Fq zero = Fq::zero(pres.field_m), one = Fq::one(pres.field_m);

    for (const D& delta : homgr_detail::candidate_degrees(pres, X, Y, dm)) {
        HomSlot<D> slot;
        slot.delta = delta;
        // Chain-map variables.
        for (const auto& [h, xs] : X.terms) {
            const auto* ys = Y.at(h);
            if (!ys) continue;
            for (size_t a = 0; a < xs.size(); ++a)
                for (size_t b = 0; b < ys->size(); ++b)
                    for (size_t pi = 0; pi < pres.basis.size(); ++pi) {
                        const Path& p = pres.basis[pi];
                        if (p.src != xs[a].vertex || p.tgt != (*ys)[b].vertex) continue;
                        if (!(dm.of_path(p) == (*ys)[b].shift + delta - xs[a].shift)) continue;
                        slot.vars.push_back({h, a, b, static_cast<int>(pi)});
                    }
        }
        if (slot.vars.empty()) continue;

        // Chain condition rows: for each h with X^h and Y^{h+1}, each pair
        // (a in X^h, c in Y^{h+1}), each basis path coordinate.
        std::map<std::tuple<int, size_t, size_t, int>, size_t> eq_row;
        auto row_index = [&](int h, size_t a, size_t c, int path) {
            auto key = std::make_tuple(h, a, c, path);
            auto it = eq_row.find(key);
            if (it != eq_row.end()) return it->second;
            size_t idx = eq_row.size();
            eq_row.emplace(key, idx);
            return idx;
        };
        // Collect matrix columns (one per variable).
        std::vector<std::map<size_t, Fq>> cols(slot.vars.size());
        for (size_t vi = 0; vi < slot.vars.size(); ++vi) {
            const auto& v = slot.vars[vi];
            const Path& p = pres.basis[v.path];
            // term F^h . d_Y^h contributing at (h, a, c)
            if (const auto* dy = Y.d(v.h)) {
                const auto* yn = Y.at(v.h + 1);
                for (size_t c = 0; yn && c < yn->size(); ++c) {
                    FElem prod = pres.nf(elem_mul(elem_of_path(p, one), (*dy)[v.b][c]));
                    for (const auto& [q, coef] : prod.terms)
                        cols[vi][row_index(v.h, v.a, c, pres.basis_index(q))] += coef;
                }
            }
            // term d_X^{h-1} . F^h contributing at (h-1, a0, c = v.b)
            if (const auto* dx = X.d(v.h - 1)) {
                const auto* x0 = X.at(v.h - 1);
                for (size_t a0 = 0; x0 && a0 < x0->size(); ++a0) {
                    FElem prod = pres.nf(elem_mul((*dx)[a0][v.a], elem_of_path(p, one)));
                    for (const auto& [q, coef] : prod.terms)
                        cols[vi][row_index(v.h - 1, a0, v.b, pres.basis_index(q))] += coef;
                }
            }
        }
        size_t nrows = eq_row.size();
        FMat M(slot.vars.size(), nrows, zero);
        for (size_t vi = 0; vi < slot.vars.size(); ++vi)
            for (const auto& [r, coef] : cols[vi]) M[vi][r] = coef;
        // Kernel of vars -> equations (variables as rows: kernel of M^T; we
        // want x (over vars) with sum_v x_v col_v = 0, i.e. x M = 0).
        FMat Mt(nrows, slot.vars.size(), zero);
        for (size_t vi = 0; vi < slot.vars.size(); ++vi)
            for (size_t r = 0; r < nrows; ++r) Mt[r][vi] = M[vi][r];
        slot.z_basis = kernel(Mt, pres.field_m);

        if (slot.z_basis.empty()) continue;

        // Null-homotopies: s^h: X^h -> Y^{h-1}; n(s) = s d_Y + d_X s.
        RowSpan bspan(slot.vars.size());
        std::map<std::tuple<int, size_t, size_t, int>, size_t> var_index;
        for (size_t vi = 0; vi < slot.vars.size(); ++vi)
            var_index[std::make_tuple(slot.vars[vi].h, slot.vars[vi].a, slot.vars[vi].b,
                                      slot.vars[vi].path)] = vi;
        for (const auto& [h, xs] : X.terms) {
            const auto* ym = Y.at(h - 1);
            if (!ym) continue;
            for (size_t a = 0; a < xs.size(); ++a)
                for (size_t b = 0; b < ym->size(); ++b)
                    for (const auto& p : pres.basis) {
                        if (p.src != xs[a].vertex || p.tgt != (*ym)[b].vertex) continue;
                        if (!(dm.of_path(p) == (*ym)[b].shift + delta - xs[a].shift)) continue;
                        // n(s) for the elementary homotopy s = p at (h, a, b)
                        FVec n(slot.vars.size(), zero);
                        auto add_entry = [&](int hh, size_t aa, size_t bb, const FElem& e) {
                            for (const auto& [q, coef] : e.terms) {
                                auto it = var_index.find(
                                    std::make_tuple(hh, aa, bb, pres.basis_index(q)));
                                if (it == var_index.end())
                                    throw Error("internal: homotopy image escaped the "
                                                "chain-map variable space");
                                n[it->second] += coef;
                            }
                        };
                        if (const auto* dy = Y.d(h - 1)) {
                            const auto* yh = Y.at(h);
                            for (size_t c = 0; yh && c < yh->size(); ++c)
                                add_entry(h, a, c,
                                          pres.nf(elem_mul(elem_of_path(p, one), (*dy)[b][c])));
                        }
                        if (const auto* dx = X.d(h - 1)) {
                            const auto* x0 = X.at(h - 1);
                            for (size_t a0 = 0; x0 && a0 < x0->size(); ++a0)
                                add_entry(h - 1, a0, b,
                                          pres.nf(elem_mul((*dx)[a0][a], elem_of_path(p, one))));
                        }
                        bspan.add(std::move(n));
                    }
        }
        for (const auto& r : bspan.rows()) slot.b_basis.push_back(r);

        // Representatives: z-basis vectors extending the homotopy span.
        RowSpan acc(slot.vars.size());
        for (const auto& b : slot.b_basis) acc.add(b);
        for (const auto& z : slot.z_basis)
            if (acc.add(z)) slot.reps.push_back(z);

        slot.coord_matrix = FMat();
        for (const auto& r : slot.reps) slot.coord_matrix.add_row(r);
        for (const auto& b : slot.b_basis) slot.coord_matrix.add_row(b);
        if (!slot.reps.empty() || !slot.b_basis.empty()) out.slots.push_back(std::move(slot));
    }
    return out;
}

// Convert a coordinate vector over a slot's variables into a ChainMap.
template <class D>
ChainMap<D> chain_map_of(const Presentation& pres, const GradedComplex<D>& X,
                         const GradedComplex<D>& Y, const HomSlot<D>& slot, const FVec& v) {
    ChainMap<D> cm;
    cm.delta = slot.delta;
    for (const auto& [h, xs] : X.terms) {
        const auto* ys = Y.at(h);
        if (!ys) continue;
        cm.f[h].assign(xs.size(), std::vector<FElem>(ys->size()));
    }
    for (size_t vi = 0; vi < slot.vars.size(); ++vi) {
        if (v[vi].is_zero()) continue;
        const auto& var = slot.vars[vi];
        cm.f[var.h][var.a][var.b].add_term(pres.basis[var.path], v[vi]);
    }
    return cm;
}

// Coordinates of a chain map over a slot's variables.
template <class D>
FVec chain_map_coords(const Presentation& pres, const HomSlot<D>& slot, const ChainMap<D>& cm) {
    FVec v(slot.vars.size(), Fq::zero(pres.field_m));
    std::map<std::tuple<int, size_t, size_t, int>, size_t> var_index;
    for (size_t vi = 0; vi < slot.vars.size(); ++vi)
        var_index[std::make_tuple(slot.vars[vi].h, slot.vars[vi].a, slot.vars[vi].b,
                                  slot.vars[vi].path)] = vi;
    for (const auto& [h, M] : cm.f)
        for (size_t a = 0; a < M.size(); ++a)
            for (size_t b = 0; b < M[a].size(); ++b)
                for (const auto& [p, c] : M[a][b].terms) {
                    auto it = var_index.find(std::make_tuple(h, a, b, pres.basis_index(p)));
                    if (it == var_index.end())
                        throw Error("internal: chain map outside the slot's variable space");
                    v[it->second] += c;
                }
    return v;
}

// Class coordinates (over the slot's representatives) of a chain map; the
// remainder against null-homotopic maps is discarded.
template <class D>
FVec class_coords(const Presentation& pres, const HomSlot<D>& slot, const ChainMap<D>& cm) {
    FVec v = chain_map_coords(pres, slot, cm);
    auto x = solve_left(slot.coord_matrix, v, pres.field_m);
    if (!x) throw Error("internal: chain map is not in the chain-map space");
    return FVec(x->begin(), x->begin() + slot.reps.size());
}

}  // namespace gqa
