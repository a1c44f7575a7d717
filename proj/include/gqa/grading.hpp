// Gradings as integer degree assignments on arrows.
//
// The homogeneity system has one equation per pair of monomials inside a
// defining relation (their arrow-content vectors must have equal degree);
// its kernel lattice H is the space of homogeneous assignments.  The
// coboundary sublattice B (vertex potentials n, arrow i->j picking up
// n_i - n_j) realizes graded Morita shifts; gradings up to graded Morita
// equivalence are classified by canonical coordinates on H/B.

#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "gqa/degrees.hpp"
#include "gqa/intlattice.hpp"
#include "gqa/mpoly.hpp"
#include "gqa/rewrite.hpp"

namespace gqa {

// Arrow-content vector of a path.
inline IVec arrow_content(const Path& p, size_t n_arrows) {
    IVec v(n_arrows, 0);
    for (int32_t a : p.arrows) v[a] += 1;
    return v;
}

// One row per monomial pair within a relation; monomial relations (rhs = 0,
// single path) contribute nothing.
inline IMat homogeneity_system(const Presentation& pres) {
    size_t n = pres.quiver.n_arrows();
    IMat sys;
    for (const auto& rel : pres.relations) {
        std::vector<IVec> monos;
        for (const auto& [p, c] : rel.lhs.terms) monos.push_back(arrow_content(p, n));
        for (const auto& [p, c] : rel.rhs.terms) monos.push_back(arrow_content(p, n));
        for (size_t i = 1; i < monos.size(); ++i) {
            IVec row = isub(monos[i], monos[0]);
            if (!izero(row)) sys.push_back(std::move(row));
        }
    }
    return sys;
}

template <class D>
bool in_homogeneity_lattice(const Presentation& pres, const DegreeMap<D>& dm) {
    return pres.is_homogeneous(dm);
}

inline IVec coboundary_vector(const Quiver& q, size_t vertex) {
    IVec v(q.n_arrows(), 0);
    for (size_t a = 0; a < q.n_arrows(); ++a) {
        if (q.arrows[a].src == static_cast<int>(vertex)) v[a] += 1;
        if (q.arrows[a].tgt == static_cast<int>(vertex)) v[a] -= 1;
    }
    return v;
}

struct GradingLattice {
    size_t n_arrows = 0;
    IMat constraints;     // homogeneity system
    IMat h_basis;         // HNF basis of H
    IMat b_basis;         // HNF basis of B
    size_t quotient_rank = 0;
    std::vector<i64> torsion;  // invariant factors > 1 of H/B, if any
    IMat quotient_gens;        // free-part generators, as arrow vectors

    // internals for classification
    IMat snf_V, snf_Vinv;
    size_t snf_b = 0;  // number of nonzero invariant factors
    std::vector<i64> snf_diag;

    bool contains(const IVec& deg) const { return lattice_contains(h_basis, deg); }

    // Free-part canonical coordinates of a homogeneous assignment's class.
    IVec classify(const IVec& deg) const {
        auto t = solve_in_lattice(h_basis, deg);
        if (!t) throw Error("classify: assignment is not homogeneous");
        size_t k = h_basis.size();
        IVec w(k, 0);
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < k; ++i) w[j] += (*t)[i] * snf_V[i][j];
        for (size_t i = 0; i < snf_b; ++i)
            if (snf_diag[i] != 0 && w[i] % snf_diag[i] != 0)
                throw Error("classify: class has a torsion component");
        return IVec(w.begin() + snf_b, w.end());
    }

    // Canonical lattice representative of free-part coordinates.
    IVec representative(const IVec& coords) const {
        if (coords.size() != quotient_rank) throw Error("cocharacter length != torus rank");
        IVec deg(n_arrows, 0);
        for (size_t j = 0; j < coords.size(); ++j)
            deg = iadd(deg, iscale(quotient_gens[j], coords[j]));
        return deg;
    }
};

inline GradingLattice grading_lattice(const Presentation& pres) {
    GradingLattice L;
    L.n_arrows = pres.quiver.n_arrows();
    L.constraints = homogeneity_system(pres);
    L.h_basis = L.constraints.empty()
                    ? [&] {
                          IMat id(L.n_arrows, IVec(L.n_arrows, 0));
                          for (size_t i = 0; i < L.n_arrows; ++i) id[i][i] = 1;
                          return id;
                      }()
                    : kernel_lattice(L.constraints, L.n_arrows);

    IMat bgens;
    for (size_t v = 0; v < pres.quiver.n_vertices(); ++v) {
        IVec cb = coboundary_vector(pres.quiver, v);
        if (!izero(cb)) bgens.push_back(std::move(cb));
    }
    L.b_basis = hnf(bgens);
    for (const auto& b : L.b_basis)
        if (!lattice_contains(L.h_basis, b))
            throw Error("coboundary lattice escapes the homogeneity lattice");

    // B generators in H-coordinates, then SNF for the quotient structure.
    size_t k = L.h_basis.size();
    IMat b_in_h;
    for (const auto& b : L.b_basis) {
        auto t = solve_in_lattice(L.h_basis, b);
        if (!t) throw Error("internal: coboundary not in H");
        t->resize(k, 0);
        b_in_h.push_back(std::move(*t));
    }
    Snf s = smith_normal_form(b_in_h, k);
    L.snf_V = s.V;
    L.snf_Vinv = s.Vinv;
    L.snf_diag = s.diag;
    L.snf_b = s.diag.size();
    for (i64 d : s.diag)
        if (d > 1) L.torsion.push_back(d);
    L.quotient_rank = k - L.snf_b;
    for (size_t j = L.snf_b; j < k; ++j) {
        // generator = (e_j * Vinv) * h_basis
        IVec deg(L.n_arrows, 0);
        for (size_t i = 0; i < k; ++i)
            deg = iadd(deg, iscale(L.h_basis[i], L.snf_Vinv[j][i]));
        L.quotient_gens.push_back(std::move(deg));
    }
    return L;
}

// The generic grading: arrow degrees given symbolically by their coordinate
// columns with respect to the H-basis.  Path degrees then live in Z^k and
// equality of affine degree expressions modulo the homogeneity constraints
// is exact vector equality.
inline SymDegrees generic_grading(const GradingLattice& L) {
    SymDegrees g;
    for (size_t a = 0; a < L.n_arrows; ++a) {
        SymDeg d;
        d.c.resize(L.h_basis.size());
        for (size_t i = 0; i < L.h_basis.size(); ++i) d.c[i] = L.h_basis[i][a];
        g.deg.push_back(std::move(d));
    }
    return g;
}

inline IntDegrees rescale(const IntDegrees& dm, i64 r) {
    if (r == 0) throw Error("rescale by zero");
    IntDegrees out = dm;
    for (auto& d : out.deg) d *= r;
    return out;
}

inline IntDegrees morita_shift(const Quiver& q, const IntDegrees& dm, const IVec& offsets) {
    IntDegrees out = dm;
    for (size_t a = 0; a < q.n_arrows(); ++a)
        out.deg[a] += offsets[q.arrows[a].src] - offsets[q.arrows[a].tgt];
    return out;
}

// ---------------------------------------------------------------------------
// Positivity: a nonzero entrywise-nonnegative vector in H, or a Gordan
// certificate that none exists.

struct PositiveResult {
    enum class Status { Found, None, Inapplicable } status;
    std::optional<IVec> witness;      // nonzero, >= 0, homogeneous
    std::optional<IVec> certificate;  // y with y^T * constraints strictly positive
};

inline PositiveResult positive_grading_exists(const Presentation& pres) {
    GradingLattice L = grading_lattice(pres);
    size_t n = L.n_arrows, k = L.h_basis.size();
    PositiveResult res{PositiveResult::Status::None, std::nullopt, std::nullopt};
    if (n == 0) return res;

    // Search: exists t with t*H >= 0 and (t*H)_a >= 1 for some arrow a.
    for (size_t a = 0; a < n && k > 0; ++a) {
        IMat C;
        IVec d;
        for (size_t j = 0; j < n; ++j) {
            IVec row(k, 0);
            for (size_t i = 0; i < k; ++i) row[i] = L.h_basis[i][j];
            C.push_back(std::move(row));
            d.push_back(j == a ? 1 : 0);
        }
        if (auto t = fm_feasible(C, d)) {
            IVec x(n, 0);
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < k; ++i) x[j] += (*t)[i] * L.h_basis[i][j];
            bool ok = !izero(x);
            for (i64 v : x) ok = ok && v >= 0;
            if (ok && L.contains(x)) {
                res.status = PositiveResult::Status::Found;
                res.witness = std::move(x);
                return res;
            }
        }
    }

    // Infeasible.  For quivers without parallel arrows this decides the
    // question; certify via Gordan's alternative: some row combination of the
    // constraint system is strictly positive.
    if (pres.quiver.has_parallel_arrows()) {
        res.status = PositiveResult::Status::Inapplicable;
        return res;
    }
    size_t m = L.constraints.size();
    if (m > 0) {
        IMat C;
        IVec d;
        for (size_t j = 0; j < n; ++j) {
            IVec row(m, 0);
            for (size_t i = 0; i < m; ++i) row[i] = L.constraints[i][j];
            C.push_back(std::move(row));
            d.push_back(1);
        }
        if (auto y = fm_feasible(C, d)) {
            res.certificate = std::move(*y);
        }
    }
    res.status = PositiveResult::Status::None;
    return res;
}

// ---------------------------------------------------------------------------
// Tightness.

struct TightnessVerdict {
    enum class Verdict { Tight, NotTight, Unknown } verdict;
    std::optional<IVec> witness;  // all-ones assignment when tight
    std::string obstruction;      // trace when not tight
};

// Pretty path printer that compresses periodic words: c2*d2*c2*d2 -> (c2*d2)^2.
inline std::string pretty_word(const Quiver& q, const Path& p) {
    size_t n = p.length();
    for (size_t period = 1; period <= n / 2; ++period) {
        if (n % period) continue;
        bool periodic = true;
        for (size_t i = period; i < n && periodic; ++i)
            periodic = p.arrows[i] == p.arrows[i - period];
        if (!periodic) continue;
        std::string w;
        for (size_t i = 0; i < period; ++i) {
            if (i) w += "*";
            w += q.arrows[p.arrows[i]].name;
        }
        return "(" + w + ")^" + std::to_string(n / period);
    }
    return path_str(q, p);
}

namespace tight_detail {

// t_a = a + sum of correction variables over parallel basis paths of length
// >= 2; the mechanized obstruction needs each relation monomial to be
// reproduced exactly by the product of the t's, identically in the
// correction coefficients.
struct TSystem {
    std::vector<Elem<MPoly>> t;  // per arrow
};

inline TSystem build_t_system(const Presentation& pres) {
    TSystem sys;
    Fq one = Fq::one(pres.field_m);
    size_t var = 0;
    for (size_t a = 0; a < pres.quiver.n_arrows(); ++a) {
        Elem<MPoly> ta = elem_of_path(Path::arrow(pres.quiver, a), MPoly::constant(one));
        for (const auto& q : pres.basis) {
            if (q.length() < 2) continue;
            if (q.src != pres.quiver.arrows[a].src || q.tgt != pres.quiver.arrows[a].tgt)
                continue;
            ta.add_term(q, MPoly::variable(var++, one));
        }
        sys.t.push_back(std::move(ta));
    }
    return sys;
}

inline bool reproduces(const Presentation& pres, const TSystem& sys, const Path& mono) {
    Fq one = Fq::one(pres.field_m);
    Elem<MPoly> prod = elem_of_path(Path::vertex(mono.src), MPoly::constant(one));
    for (int32_t a : mono.arrows) prod = pres.normal_form(elem_mul(prod, sys.t[a]));
    FElem tf = pres.nf(elem_of_path(mono, one));
    if (tf.is_zero()) return false;
    Elem<MPoly> target;
    for (const auto& [p, c] : tf.terms) target.add_term(p, MPoly::constant(c));
    if (prod.terms.size() != target.terms.size()) return false;
    for (const auto& [p, c] : target.terms) {
        auto it = prod.terms.find(p);
        if (it == prod.terms.end() || !(it->second == c)) return false;
    }
    return true;
}

}  // namespace tight_detail

// catalog_torus_fact: the family's outer-automorphism group is known (from
// the classification) to have all maximal tori conjugate to the diagonal
// torus of the standard presentation; under that fact, together with a
// minimal presentation, tight <=> the all-ones vector is homogeneous.
inline TightnessVerdict tightness(const Presentation& pres, bool catalog_torus_fact = false) {
    size_t n = pres.quiver.n_arrows();
    IntDegrees ones{std::vector<i64>(n, 1)};
    if (pres.is_homogeneous(ones))
        return {TightnessVerdict::Verdict::Tight, ones.deg, ""};

    // Mechanized obstruction from the degree-one-generator lemma.
    if (!pres.quiver.has_parallel_arrows()) {
        auto sys = tight_detail::build_t_system(pres);
        for (const auto& rel : pres.relations) {
            std::vector<Path> monos;
            for (const auto& [p, c] : (rel.lhs + rel.rhs).terms) monos.push_back(p);
            if (monos.size() < 2) continue;
            size_t lo = 0, hi = 0;
            for (size_t i = 1; i < monos.size(); ++i) {
                if (monos[i].length() < monos[lo].length()) lo = i;
                if (monos[i].length() > monos[hi].length()) hi = i;
            }
            if (monos[lo].length() == monos[hi].length()) continue;
            bool all = true;
            for (const auto& m : monos)
                if (!tight_detail::reproduces(pres, sys, m)) {
                    all = false;
                    break;
                }
            if (!all) continue;
            std::ostringstream os;
            os << pretty_word(pres.quiver, monos[lo]) << " = "
               << pretty_word(pres.quiver, monos[hi]) << " forces degree "
               << monos[lo].length() << " = " << monos[hi].length();
            return {TightnessVerdict::Verdict::NotTight, std::nullopt, os.str()};
        }
    }

    if (catalog_torus_fact) {
        bool minimal = true;
        for (size_t a = 0; a < n && minimal; ++a)
            if (pres.arrow_in_rad2(static_cast<int>(a))) minimal = false;
        if (minimal && !pres.quiver.has_parallel_arrows())
            return {TightnessVerdict::Verdict::NotTight, std::nullopt,
                    "every grading class has an arrow-degree representative, and no "
                    "homogeneous assignment puts all arrows in degree 1"};
    }
    return {TightnessVerdict::Verdict::Unknown, std::nullopt, ""};
}

}  // namespace gqa
