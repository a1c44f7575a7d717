// Grading transfer across the derived equivalences between the block
// families: A_r -> B_r, B_r -> C_r, D2A^{r,c} -> D2B^{r,c}.
//
// The tilting complex T = (+) T_i is built with internal shifts that make
// the differentials degree 0.  The endomorphism algebra E = End_{K^b}(T)
// (with "f then g" products, i.e. End^op) is assembled on homotopy-class
// bases; its radical and radical square are computed honestly, and the
// graded quiver of E — one arrow per (i,j) slot of rad E / rad^2 E with a
// forced homogeneous degree — is matched against the target family's quiver.
// This removes the path-vs-arrow matching ambiguity: each arrow slot is
// one-dimensional, so its degree is canonical.

#pragma once

#include <optional>
#include <string>

#include "gqa/catalog.hpp"
#include "gqa/complex.hpp"
#include "gqa/grading.hpp"

namespace gqa {

enum class TransferEdge { AtoB, BtoC, D2AtoD2B };

inline std::optional<TransferEdge> edge_from_name(const std::string& s) {
    if (s == "A-B") return TransferEdge::AtoB;
    if (s == "B-C") return TransferEdge::BtoC;
    if (s == "D2A-D2B") return TransferEdge::D2AtoD2B;
    return std::nullopt;
}

inline Family edge_source(TransferEdge e) {
    switch (e) {
        case TransferEdge::AtoB: return Family::A;
        case TransferEdge::BtoC: return Family::B;
        case TransferEdge::D2AtoD2B: return Family::D2A;
    }
    throw Error("unknown edge");
}

inline Family edge_target(TransferEdge e) {
    switch (e) {
        case TransferEdge::AtoB: return Family::B;
        case TransferEdge::BtoC: return Family::C;
        case TransferEdge::D2AtoD2B: return Family::D2B;
    }
    throw Error("unknown edge");
}

// The summand T_i corresponds to vertex i of the target quiver.
template <class D>
std::vector<GradedComplex<D>> tilting_complex(TransferEdge e, const Presentation& src,
                                              const DegreeMap<D>& dm) {
    if (!src.is_homogeneous(dm))
        throw Error("tilting transfer requires a homogeneous source grading");
    Fq one = Fq::one(src.field_m);
    auto arrow_elem = [&](const char* name) {
        int a = src.quiver.arrow_index(name);
        if (a < 0) throw Error("edge does not match the source presentation");
        return elem_of_path(Path::arrow(src.quiver, a), one);
    };
    auto arrow_deg = [&](const char* name) { return dm.deg[src.quiver.arrow_index(name)]; };
    D z = DegTraits<D>::zero();

    std::vector<GradedComplex<D>> T;
    switch (e) {
        case TransferEdge::AtoB: {
            GradedComplex<D> t1;
            t1.terms[0] = {Summand<D>{1, z - arrow_deg("a2")}, Summand<D>{2, z - arrow_deg("b2")}};
            t1.terms[1] = {Summand<D>{0, z}};
            t1.diff[0] = {{arrow_elem("a2")}, {arrow_elem("b2")}};
            T.push_back(std::move(t1));
            T.push_back(stalk_complex<D>(1));
            T.push_back(stalk_complex<D>(2));
        } break;
        case TransferEdge::BtoC: {
            T.push_back(stalk_complex<D>(0));
            GradedComplex<D> t2;
            t2.terms[0] = {Summand<D>{0, z - arrow_deg("c1")}, Summand<D>{2, z - arrow_deg("d2")}};
            t2.terms[1] = {Summand<D>{1, z}};
            t2.diff[0] = {{arrow_elem("c1")}, {arrow_elem("d2")}};
            T.push_back(std::move(t2));
            T.push_back(stalk_complex<D>(2));
        } break;
        case TransferEdge::D2AtoD2B: {
            GradedComplex<D> t0;
            FElem ga = arrow_elem("gamma");
            FElem gam_al = src.nf(elem_mul(ga, arrow_elem("alpha")));
            t0.terms[0] = {Summand<D>{1, z - arrow_deg("gamma")},
                           Summand<D>{1, z - (arrow_deg("gamma") + arrow_deg("alpha"))}};
            t0.terms[1] = {Summand<D>{0, z}};
            t0.diff[0] = {{ga}, {gam_al}};
            T.push_back(std::move(t0));
            T.push_back(stalk_complex<D>(1));
        } break;
    }
    for (const auto& t : T) {
        auto bad = validate(t, src, dm);
        if (!bad.empty()) throw Error("tilting summand fails validation: " + bad.front());
    }
    return T;
}

// ---------------------------------------------------------------------------
// The endomorphism algebra of a direct sum of complexes, on homotopy-class
// bases, with enough structure to read off its graded quiver.

template <class D>
class EndAlgebra {
  public:
    EndAlgebra(const Presentation& pres, std::vector<GradedComplex<D>> summands,
               const DegreeMap<D>& dm)
        : pres_(pres), T_(std::move(summands)), dm_(dm) {
        size_t n = T_.size();
        hom_.resize(n);
        for (size_t i = 0; i < n; ++i) {
            hom_[i].reserve(n);
            for (size_t j = 0; j < n; ++j) hom_[i].push_back(homgr(pres_, T_[i], T_[j], dm_));
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t s = 0; s < hom_[i][j].slots.size(); ++s)
                    for (size_t r = 0; r < hom_[i][j].slots[s].reps.size(); ++r)
                        basis_.push_back({i, j, s, r});
    }

    size_t n_summands() const { return T_.size(); }
    const HomSpace<D>& hom(size_t i, size_t j) const { return hom_[i][j]; }
    size_t hom_class_dim(size_t i, size_t j) const { return hom_[i][j].total_class_dim(); }
    size_t total_dim() const {
        size_t s = 0;
        for (size_t i = 0; i < T_.size(); ++i)
            for (size_t j = 0; j < T_.size(); ++j) s += hom_class_dim(i, j);
        return s;
    }

    struct QuiverArrow {
        int i, j;
        D deg;
    };

    // Arrows of the (basic) algebra E: a homogeneous basis of rad/rad^2,
    // one entry per contributing (i, j, degree).
    std::vector<QuiverArrow> quiver_arrows() const {
        size_t n = T_.size();
        // Homogeneous radical basis: (i, j, slot, coefficient vector over reps)
        struct RadElt {
            size_t i, j, slot;
            FVec coef;
        };
        std::vector<RadElt> rad;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                for (size_t s = 0; s < hom_[i][j].slots.size(); ++s) {
                    const auto& slot = hom_[i][j].slots[s];
                    if (slot.reps.empty()) continue;
                    if (i != j || !(slot.delta == DegTraits<D>::zero())) {
                        // Off-diagonal Hom and nonzero-degree loops lie in rad.
                        for (size_t r = 0; r < slot.reps.size(); ++r) {
                            FVec c(slot.reps.size(), Fq::zero(pres_.field_m));
                            c[r] = Fq::one(pres_.field_m);
                            rad.push_back({i, j, s, std::move(c)});
                        }
                    } else {
                        // Degree-0 part of the local ring End(T_i): kernel of
                        // the residue character lambda.
                        FVec lam = lambda_row(i, s);
                        FMat lrow;
                        lrow.add_row(lam);
                        for (auto& v : kernel(lrow, pres_.field_m))
                            rad.push_back({i, j, s, std::move(v)});
                    }
                }
            }

        // rad^2 spans, grouped per (i, j, slot).
        std::map<std::tuple<size_t, size_t, size_t>, RowSpan> rad2;
        for (const auto& f : rad)
            for (const auto& g : rad) {
                if (f.j != g.i) continue;
                ChainMap<D> cf = materialize(f.i, f.j, f.slot, f.coef);
                ChainMap<D> cg = materialize(g.i, g.j, g.slot, g.coef);
                ChainMap<D> prod =
                    compose_chain_maps(pres_, T_[f.i], T_[f.j], T_[g.j], cf, cg);
                D delta = prod.delta;
                int s2 = slot_index(f.i, g.j, delta);
                if (s2 < 0) {
                    ensure_zero(prod);
                    continue;
                }
                const auto& slot = hom_[f.i][g.j].slots[s2];
                FVec cls = class_coords(pres_, slot, prod);
                if (is_zero(cls)) continue;
                auto key = std::make_tuple(f.i, g.j, static_cast<size_t>(s2));
                auto it = rad2.emplace(key, RowSpan(slot.reps.size())).first;
                it->second.add(std::move(cls));
            }

        // Arrow slots: defect of rad over rad^2 per (i, j, degree).
        std::vector<QuiverArrow> out;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t s = 0; s < hom_[i][j].slots.size(); ++s) {
                    const auto& slot = hom_[i][j].slots[s];
                    size_t rad_dim = 0;
                    for (const auto& f : rad)
                        if (f.i == i && f.j == j && f.slot == s) ++rad_dim;
                    if (rad_dim == 0) continue;
                    size_t r2 = 0;
                    auto it = rad2.find(std::make_tuple(i, j, s));
                    if (it != rad2.end()) r2 = it->second.dim();
                    for (size_t k = r2; k < rad_dim; ++k)
                        out.push_back({static_cast<int>(i), static_cast<int>(j), slot.delta});
                }
        return out;
    }

  private:
    const Presentation& pres_;
    std::vector<GradedComplex<D>> T_;
    DegreeMap<D> dm_;
    std::vector<std::vector<HomSpace<D>>> hom_;
    struct BElt {
        size_t i, j, slot, rep;
    };
    std::vector<BElt> basis_;

    int slot_index(size_t i, size_t j, const D& delta) const {
        const auto& hs = hom_[i][j];
        for (size_t s = 0; s < hs.slots.size(); ++s)
            if (hs.slots[s].delta == delta) return static_cast<int>(s);
        return -1;
    }

    ChainMap<D> materialize(size_t i, size_t j, size_t slot, const FVec& coef) const {
        const auto& sl = hom_[i][j].slots[slot];
        FVec v(sl.vars.size(), Fq::zero(pres_.field_m));
        for (size_t r = 0; r < coef.size(); ++r)
            if (!coef[r].is_zero())
                for (size_t t = 0; t < v.size(); ++t) v[t] += sl.reps[r][t] * coef[r];
        return chain_map_of(pres_, T_[i], T_[j], sl, v);
    }

    void ensure_zero(const ChainMap<D>& cm) const {
        for (const auto& [h, M] : cm.f)
            for (const auto& row : M)
                for (const auto& e : row)
                    if (!e.is_zero())
                        throw Error("internal: nonzero chain map in an empty Hom degree");
    }

    // Identity chain map of T_i.
    ChainMap<D> identity_map(size_t i) const {
        ChainMap<D> cm;
        cm.delta = DegTraits<D>::zero();
        for (const auto& [h, xs] : T_[i].terms) {
            std::vector<std::vector<FElem>> M(xs.size(), std::vector<FElem>(xs.size()));
            for (size_t a = 0; a < xs.size(); ++a)
                M[a][a] = elem_of_path(Path::vertex(xs[a].vertex), Fq::one(pres_.field_m));
            cm.f[h] = std::move(M);
        }
        return cm;
    }

    // Residue character of the local ring's degree-0 part, as a row over the
    // slot's representatives: lambda(u) is the unique field scalar with
    // u - lambda(u) id non-invertible.
    FVec lambda_row(size_t i, size_t s) const {
        const auto& slot = hom_[i][i].slots[s];
        size_t K = slot.reps.size();
        Field F(pres_.field_m);
        // Multiplication table of the degree-0 part on class coordinates.
        std::vector<FMat> left_mult(K, FMat(K, K, F.zero()));
        std::vector<ChainMap<D>> reps;
        for (size_t r = 0; r < K; ++r) {
            FVec c(K, F.zero());
            c[r] = F.one();
            reps.push_back(materialize(i, i, s, c));
        }
        for (size_t u = 0; u < K; ++u)
            for (size_t v = 0; v < K; ++v) {
                ChainMap<D> prod =
                    compose_chain_maps(pres_, T_[i], T_[i], T_[i], reps[u], reps[v]);
                int s2 = slot_index(i, i, prod.delta);
                if (s2 != static_cast<int>(s))
                    throw Error("internal: degree-0 part not closed under product");
                FVec cls = class_coords(pres_, slot, prod);
                for (size_t t = 0; t < K; ++t) left_mult[u][v][t] = cls[t];
            }
        // Identity coordinates.
        FVec idc = class_coords(pres_, slot, identity_map(i));
        FVec lam(K, F.zero());
        for (size_t u = 0; u < K; ++u) {
            int found = -1;
            for (uint32_t bits = 0; bits < F.size(); ++bits) {
                Fq mu = F.el(bits);
                // u - mu*id acting by left multiplication
                FMat M(K, K, F.zero());
                for (size_t v = 0; v < K; ++v)
                    for (size_t t = 0; t < K; ++t) M[v][t] = left_mult[u][v][t];
                // subtract mu * (id-left-mult): id acts as identity on classes
                for (size_t v = 0; v < K; ++v) M[v][v] += mu;
                if (rank(M) < K) {
                    if (found >= 0)
                        throw Error("internal: endomorphism local ring has split residue");
                    found = static_cast<int>(bits);
                }
            }
            if (found < 0) throw Error("internal: no residue eigenvalue found");
            lam[u] = F.el(static_cast<uint32_t>(found));
        }
        // Normalize: lambda(identity) must be 1.
        Fq check = F.zero();
        for (size_t u = 0; u < K; ++u) check += idc[u] * lam[u];
        if (!check.is_one()) throw Error("internal: residue character mis-normalized");
        return lam;
    }
};

// ---------------------------------------------------------------------------

template <class D>
struct TransferResult {
    DegreeMap<D> target;                      // degrees on the target quiver's arrows
    std::optional<DegreeMap<D>> alternative;  // the equivalent alternate choice, when any
    size_t end_dim = 0;                       // ungraded dim of End(T), for cross-checks
};

template <class D>
TransferResult<D> transfer_grading(TransferEdge e, int r, int c, const Presentation& src,
                                   const DegreeMap<D>& dm, const Presentation& tgt) {
    if (e == TransferEdge::BtoC && r == 1)
        throw Error("edge B-C needs r >= 2 (C_1 is A_1 up to a vertex relabeling)");
    auto T = tilting_complex(e, src, dm);
    EndAlgebra<D> E(src, std::move(T), dm);
    auto arrows = E.quiver_arrows();

    TransferResult<D> res;
    res.end_dim = E.total_dim();
    res.target.deg.assign(tgt.quiver.n_arrows(), DegTraits<D>::zero());
    std::vector<bool> seen(tgt.quiver.n_arrows(), false);
    for (const auto& qa : arrows) {
        int hit = -1;
        for (size_t a = 0; a < tgt.quiver.n_arrows(); ++a)
            if (tgt.quiver.arrows[a].src == qa.i && tgt.quiver.arrows[a].tgt == qa.j &&
                !seen[a]) {
                hit = static_cast<int>(a);
                break;
            }
        if (hit < 0)
            throw Error("transfer: endomorphism quiver does not match the target quiver");
        seen[hit] = true;
        res.target.deg[hit] = qa.deg;
    }
    // A target arrow with no slot of its own must be a redundant generator
    // (it lies in rad^2, e.g. eta = gamma*alpha*beta in D2B at r = 1); its
    // degree is forced by a defining relation that names it.
    for (size_t a = 0; a < tgt.quiver.n_arrows(); ++a) {
        if (seen[a]) continue;
        if (!tgt.arrow_in_rad2(static_cast<int>(a)))
            throw Error("transfer: endomorphism quiver is missing a target arrow");
        Path ap = Path::arrow(tgt.quiver, static_cast<int>(a));
        bool solved = false;
        for (const auto& rel : tgt.relations) {
            for (const auto* side : {&rel.lhs, &rel.rhs}) {
                const auto* other = side == &rel.lhs ? &rel.rhs : &rel.lhs;
                if (side->terms.size() != 1 || other->terms.empty()) continue;
                if (!(side->terms.begin()->first == ap)) continue;
                const Path& m = other->terms.begin()->first;
                bool known = true;
                for (int32_t x : m.arrows) known = known && (seen[x] || x == ap.arrows[0]);
                if (!known || std::count(m.arrows.begin(), m.arrows.end(), ap.arrows[0]))
                    continue;
                D d = DegTraits<D>::zero();
                for (int32_t x : m.arrows) d = d + res.target.deg[x];
                res.target.deg[a] = d;
                seen[a] = true;
                solved = true;
                break;
            }
            if (solved) break;
        }
        if (!solved)
            throw Error("transfer: cannot recover the degree of a redundant target arrow");
    }
    if (!tgt.is_homogeneous(res.target))
        throw Error("transfer: resulting assignment is not homogeneous on the target");

    // Per-pair consistency: the graded Hom multisets must match the target's
    // own hom spaces under the transferred grading.
    for (size_t i = 0; i < E.n_summands(); ++i)
        for (size_t j = 0; j < E.n_summands(); ++j) {
            auto got = E.hom(i, j).degree_multiset();
            auto want = tgt.hom_space(static_cast<int>(i), static_cast<int>(j), res.target);
            if (!(got == want))
                throw Error("transfer: graded Hom multiset mismatch against the target");
        }

    // The two-simple edge with c = 0 admits a second consistent assignment
    // (swap which preimage plays the role of the loop); report it.
    if (e == TransferEdge::D2AtoD2B && c == 0) {
        int al = tgt.quiver.arrow_index("alpha"), be = tgt.quiver.arrow_index("beta");
        int ga = tgt.quiver.arrow_index("gamma"), et = tgt.quiver.arrow_index("eta");
        DegreeMap<D> alt = res.target;
        alt.deg[al] = DegTraits<D>::zero() - res.target.deg[al];
        alt.deg[be] = res.target.deg[be] + res.target.deg[al];
        alt.deg[ga] = res.target.deg[ga] + res.target.deg[al];
        alt.deg[et] = res.target.deg[et];
        if (tgt.is_homogeneous(alt) && !(alt.deg == res.target.deg)) res.alternative = alt;
    }
    (void)r;
    return res;
}

template <class D>
TransferResult<D> transfer_grading(TransferEdge e, int r, int c, const DegreeMap<D>& dm,
                                   int field_m = 1) {
    Presentation src = make_block({edge_source(e), r, c}, field_m);
    Presentation tgt = make_block({edge_target(e), r, c}, field_m);
    return transfer_grading(e, r, c, src, dm, tgt);
}

}  // namespace gqa
