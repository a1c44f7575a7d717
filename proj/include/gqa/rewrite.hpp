// Noncommutative rewriting for bound quiver algebras.
//
// A presentation is completed into a confluent system of oriented rules
// under the length-then-lex path order (diamond lemma): every overlap
// ambiguity between rule left-hand sides is resolved, new rules being added
// until all critical pairs reduce to equal normal forms.  The irreducible
// paths form a basis of the quotient; radical powers are computed honestly
// as powers of the arrow ideal, not read off path lengths (the two differ
// whenever a socle relation equates words of different lengths).

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "gqa/degrees.hpp"
#include "gqa/field.hpp"
#include "gqa/linalg.hpp"
#include "gqa/mpoly.hpp"
#include "gqa/quiver.hpp"

namespace gqa {

struct Relation {
    FElem lhs, rhs;  // interpreted as lhs = rhs; rhs may be zero
};

struct Rule {
    Path lhs;
    FElem rhs;  // every path in rhs is strictly smaller than lhs
};

inline Fq coeff_mul(Fq c, Fq b) { return c * b; }
inline MPoly coeff_mul(const MPoly& c, Fq b) { return c * b; }

class Presentation {
  public:
    Quiver quiver;
    std::vector<Relation> relations;
    int field_m = 1;
    size_t max_len = 64;

    std::vector<Rule> rules;
    std::vector<Path> basis;  // irreducible paths, sorted by path order
    size_t overlaps_checked = 0;

    static Presentation complete(Quiver q, std::vector<Relation> rels, int field_m,
                                 size_t max_len) {
        Presentation p;
        p.quiver = std::move(q);
        p.relations = std::move(rels);
        p.field_m = field_m;
        p.max_len = max_len;
        p.run_completion();
        p.enumerate_basis();
        return p;
    }

    size_t dim() const { return basis.size(); }

    int basis_index(const Path& p) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), p, PathLess{});
        if (it == basis.end() || !(*it == p)) return -1;
        return static_cast<int>(it - basis.begin());
    }

    std::vector<Path> paths_between(int i, int j) const {
        std::vector<Path> r;
        for (const auto& p : basis)
            if (p.src == i && p.tgt == j) r.push_back(p);
        return r;
    }

    // ----- rewriting -------------------------------------------------------

    Path subpath(const Path& p, size_t from, size_t to) const {
        Path r;
        r.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + to);
        r.src = (from == p.length()) ? p.tgt
                                     : (from == 0 ? p.src : quiver.arrows[p.arrows[from - 1]].tgt);
        if (from == to) { r.tgt = r.src; return r; }
        r.src = quiver.arrows[p.arrows[from]].src;
        r.tgt = quiver.arrows[p.arrows[to - 1]].tgt;
        return r;
    }

    std::optional<std::pair<size_t, size_t>> find_redex(const Path& p) const {
        for (size_t pos = 0; pos < p.length(); ++pos) {
            for (size_t ri : rules_by_first_[p.arrows[pos]]) {
                const Path& u = rules[ri].lhs;
                if (u.length() > p.length() - pos) continue;
                if (std::equal(u.arrows.begin(), u.arrows.end(), p.arrows.begin() + pos))
                    return std::make_pair(ri, pos);
            }
        }
        return std::nullopt;
    }

    template <class C>
    Elem<C> normal_form(Elem<C> x) const {
        while (true) {
            const Path* redex_path = nullptr;
            std::pair<size_t, size_t> hit;
            for (const auto& [p, c] : x.terms) {
                if (auto h = find_redex(p)) {
                    redex_path = &p;
                    hit = *h;
                    break;
                }
            }
            if (!redex_path) return x;
            Path p = *redex_path;
            C c = x.terms.at(p);
            x.terms.erase(p);
            const Rule& r = rules[hit.first];
            Path pre = subpath(p, 0, hit.second);
            Path suf = subpath(p, hit.second + r.lhs.length(), p.length());
            for (const auto& [q, b] : r.rhs.terms) {
                Path full;
                full.src = pre.src;
                full.tgt = suf.tgt;
                full.arrows = pre.arrows;
                full.arrows.insert(full.arrows.end(), q.arrows.begin(), q.arrows.end());
                full.arrows.insert(full.arrows.end(), suf.arrows.begin(), suf.arrows.end());
                x.add_term(full, coeff_mul(c, b));
            }
        }
    }

    FElem nf(const FElem& x) const { return normal_form(x); }

    FElem nf_mul(const FElem& x, const FElem& y) const { return nf(elem_mul(x, y)); }

    // ----- degree bookkeeping ---------------------------------------------

    template <class D>
    bool is_homogeneous(const DegreeMap<D>& dm) const {
        for (const auto& rel : relations) {
            const D* ref = nullptr;
            D refd = DegTraits<D>::zero();
            auto scan = [&](const FElem& e) {
                for (const auto& [p, c] : e.terms) {
                    D d = dm.of_path(p);
                    if (!ref) { refd = d; ref = &refd; }
                    else if (!(d == refd)) return false;
                }
                return true;
            };
            if (!scan(rel.lhs) || !scan(rel.rhs)) return false;
        }
        return true;
    }

    // Degree multiset of e_i A e_j: the grading on Hom(P_i, P_j) under the
    // right-multiplication identification (a path of degree d is a map of
    // degree d, displayed as a summand k<-d>).
    template <class D>
    std::vector<D> hom_space(int i, int j, const DegreeMap<D>& dm) const {
        std::vector<D> r;
        for (const auto& p : basis)
            if (p.src == i && p.tgt == j) r.push_back(dm.of_path(p));
        std::sort(r.begin(), r.end());
        return r;
    }

    // ----- radical filtration ----------------------------------------------

    // rad^l as a block-diagonal family of subspaces of the algebra; blocks
    // are (source, target, degree) homogeneous components.
    template <class D>
    struct Filtration {
        struct Block {
            int src, tgt;
            D deg;
            std::vector<int> paths;  // basis indices, block coordinates
        };
        std::vector<Block> blocks;
        std::map<std::tuple<int, int, D>, int> block_of;
        // level -> block -> echelon rows in block coordinates
        std::vector<std::map<int, RowSpan>> levels;

        size_t dim_at(size_t level, int block) const {
            if (level == 0) return blocks[block].paths.size();
            if (level >= levels.size()) return 0;
            auto it = levels[level].find(block);
            return it == levels[level].end() ? 0 : it->second.dim();
        }
        size_t loewy_length() const { return levels.size(); }
    };

    template <class D>
    Filtration<D> radical_filtration(const DegreeMap<D>& dm) const {
        if (!is_homogeneous(dm)) throw Error("radical filtration: grading is not homogeneous");
        Filtration<D> f;
        for (size_t b = 0; b < basis.size(); ++b) {
            const Path& p = basis[b];
            auto key = std::make_tuple(p.src, p.tgt, dm.of_path(p));
            auto it = f.block_of.find(key);
            if (it == f.block_of.end()) {
                it = f.block_of.emplace(key, static_cast<int>(f.blocks.size())).first;
                f.blocks.push_back({p.src, p.tgt, std::get<2>(key), {}});
            }
            f.blocks[it->second].paths.push_back(static_cast<int>(b));
        }
        // Coordinates of a basis path inside its block.
        std::vector<int> block_of_path(basis.size()), pos_in_block(basis.size());
        for (size_t bl = 0; bl < f.blocks.size(); ++bl)
            for (size_t k = 0; k < f.blocks[bl].paths.size(); ++k) {
                block_of_path[f.blocks[bl].paths[k]] = static_cast<int>(bl);
                pos_in_block[f.blocks[bl].paths[k]] = static_cast<int>(k);
            }
        Fq one = Fq::one(field_m), zero = Fq::zero(field_m);

        auto elem_rows = [&](const FElem& e) {
            // Split a homogeneous element into (block, coordinate row).
            std::map<int, FVec> rows;
            for (const auto& [p, c] : e.terms) {
                int bi = basis_index(p);
                int bl = block_of_path[bi];
                auto it = rows.find(bl);
                if (it == rows.end())
                    it = rows.emplace(bl, FVec(f.blocks[bl].paths.size(), zero)).first;
                it->second[pos_in_block[bi]] += c;
            }
            return rows;
        };

        f.levels.emplace_back();  // level 0 placeholder: full algebra
        // Level 1: span of all irreducible paths of length >= 1.
        std::map<int, RowSpan> cur;
        for (size_t b = 0; b < basis.size(); ++b) {
            if (basis[b].is_vertex()) continue;
            int bl = block_of_path[b];
            auto it = cur.emplace(bl, RowSpan(f.blocks[bl].paths.size())).first;
            FVec v(f.blocks[bl].paths.size(), zero);
            v[pos_in_block[b]] = one;
            it->second.add(std::move(v));
        }
        while (!cur.empty()) {
            f.levels.push_back(cur);
            // next = cur * rad: right-multiply every row by every arrow.
            std::map<int, RowSpan> next;
            for (const auto& [bl, span] : cur) {
                const auto& block = f.blocks[bl];
                for (const auto& row : span.rows()) {
                    FElem e;
                    for (size_t k = 0; k < row.size(); ++k)
                        if (!row[k].is_zero()) e.add_term(basis[block.paths[k]], row[k]);
                    for (size_t a = 0; a < quiver.n_arrows(); ++a) {
                        if (quiver.arrows[a].src != block.tgt) continue;
                        FElem prod = nf_mul(e, elem_of_path(Path::arrow(quiver, a), one));
                        for (auto& [bl2, v] : elem_rows(prod)) {
                            auto it = next.emplace(bl2, RowSpan(f.blocks[bl2].paths.size())).first;
                            it->second.add(std::move(v));
                        }
                    }
                }
            }
            if (next.empty()) break;
            cur = std::move(next);
        }
        return f;
    }

    // Arrow-as-element membership in rad^2 (detects redundant generators).
    bool arrow_in_rad2(int arrow) const {
        auto f = radical_filtration(DegreeMap<i64>::zero(quiver.n_arrows()));
        Path ap = Path::arrow(quiver, arrow);
        int bi = basis_index(ap);
        if (bi < 0) return true;  // the arrow reduces to something else entirely
        for (size_t bl = 0; bl < f.blocks.size(); ++bl) {
            const auto& block = f.blocks[bl];
            auto pos = std::find(block.paths.begin(), block.paths.end(), bi);
            if (pos == block.paths.end()) continue;
            if (f.levels.size() <= 2) return false;
            auto it = f.levels[2].find(static_cast<int>(bl));
            if (it == f.levels[2].end()) return false;
            FVec v(block.paths.size(), Fq::zero(field_m));
            v[pos - block.paths.begin()] = Fq::one(field_m);
            return it->second.contains(v);
        }
        return false;
    }

    // ----- layer tables -----------------------------------------------------

    template <class D>
    struct LayerTable {
        // layers[l] = sorted (simple index, degree) pairs with multiplicity
        std::vector<std::vector<std::pair<int, D>>> layers;
    };

    template <class D>
    LayerTable<D> radical_layers(int vertex, const DegreeMap<D>& dm) const {
        auto f = radical_filtration(dm);
        LayerTable<D> t;
        size_t L = f.levels.size();
        t.layers.resize(L);
        for (size_t bl = 0; bl < f.blocks.size(); ++bl) {
            if (f.blocks[bl].tgt != vertex) continue;
            for (size_t l = 0; l < L; ++l) {
                size_t here = f.dim_at(l, static_cast<int>(bl));
                size_t below = f.dim_at(l + 1, static_cast<int>(bl));
                for (size_t k = below; k < here; ++k)
                    t.layers[l].emplace_back(f.blocks[bl].src, f.blocks[bl].deg);
            }
        }
        while (!t.layers.empty() && t.layers.back().empty()) t.layers.pop_back();
        for (auto& layer : t.layers) std::sort(layer.begin(), layer.end());
        return t;
    }

    // ----- confluence -------------------------------------------------------

    // Re-checks every overlap ambiguity; returns the number checked.
    size_t verify_confluence() const {
        size_t count = 0;
        for (size_t i = 0; i < rules.size(); ++i)
            for (size_t j = 0; j < rules.size(); ++j) {
                for_each_critical_pair(i, j, [&](const FElem& a, const FElem& b) {
                    ++count;
                    if (!(nf(a) + nf(b)).is_zero())
                        throw Error("confluence violated after completion");
                });
            }
        return count;
    }

  private:
    std::vector<std::vector<size_t>> rules_by_first_;

    void reindex_rules() {
        rules_by_first_.assign(quiver.n_arrows(), {});
        for (size_t i = 0; i < rules.size(); ++i)
            rules_by_first_[rules[i].lhs.arrows[0]].push_back(i);
    }

    template <class F>
    void for_each_critical_pair(size_t i, size_t j, F&& emit) const {
        const Path& u = rules[i].lhs;
        const Path& v = rules[j].lhs;
        Fq one = Fq::one(field_m);
        // Proper suffix of u equals proper prefix of v.
        for (size_t k = 1; k < std::min(u.length(), v.length()); ++k) {
            if (!std::equal(u.arrows.end() - k, u.arrows.end(), v.arrows.begin())) continue;
            Path tail = subpath(v, k, v.length());
            Path head = subpath(u, 0, u.length() - k);
            FElem a = elem_mul(rules[i].rhs, elem_of_path(tail, one));
            FElem b = elem_mul(elem_of_path(head, one), rules[j].rhs);
            emit(a, b);
        }
        // v properly contained in u.
        if (i != j && v.length() < u.length()) {
            for (size_t pos = 0; pos + v.length() <= u.length(); ++pos) {
                if (!std::equal(v.arrows.begin(), v.arrows.end(), u.arrows.begin() + pos))
                    continue;
                Path pre = subpath(u, 0, pos);
                Path suf = subpath(u, pos + v.length(), u.length());
                FElem b = elem_mul(elem_mul(elem_of_path(pre, one), rules[j].rhs),
                                   elem_of_path(suf, one));
                emit(rules[i].rhs, b);
            }
        }
    }

    void push_rule(const FElem& e, std::vector<FElem>& pending) {
        const Path* lead = e.lead();
        Fq c = e.terms.at(*lead);
#ifdef GQA_TRACE_RULES
        fprintf(stderr, "rule: %s\n", elem_str(quiver, e).c_str());
#endif
        if (lead->is_vertex())
            throw Error("relation equates an idempotent with lower terms; not admissible");
        if (lead->length() > max_len)
            throw Error("completion produced a rule longer than the saturation bound");
        FElem rest;
        for (const auto& [p, b] : e.terms)
            if (!(p == *lead)) rest.add_term(p, b);
        Rule r;
        r.lhs = *lead;
        r.rhs = elem_scale(rest, c.inv());
        for (const auto& [p, b] : r.rhs.terms)
            if (p.is_vertex())
                throw Error("relation equates a positive-length path with an idempotent");
        // Recycle existing rules whose lhs contains the new lhs.
        std::vector<Rule> kept;
        for (auto& old : rules) {
            bool contains = false;
            if (old.lhs.length() >= r.lhs.length()) {
                for (size_t pos = 0; pos + r.lhs.length() <= old.lhs.length(); ++pos)
                    if (std::equal(r.lhs.arrows.begin(), r.lhs.arrows.end(),
                                   old.lhs.arrows.begin() + pos)) {
                        contains = true;
                        break;
                    }
            }
            if (contains) pending.push_back(old.rhs + elem_of_path(old.lhs, Fq::one(field_m)));
            else kept.push_back(std::move(old));
        }
        rules = std::move(kept);
        rules.push_back(std::move(r));
        reindex_rules();
        // Normalize the right-hand sides against the updated system.
        for (auto& rr : rules) rr.rhs = nf(rr.rhs);
        // Queue critical pairs involving the new rule.
        size_t ni = rules.size() - 1;
        for (size_t i = 0; i < rules.size(); ++i) {
            for_each_critical_pair(i, ni, [&](const FElem& a, const FElem& b) {
                ++overlaps_checked;
                pending.push_back(a + b);
            });
            if (i != ni)
                for_each_critical_pair(ni, i, [&](const FElem& a, const FElem& b) {
                    ++overlaps_checked;
                    pending.push_back(a + b);
                });
        }
    }

    // Install pending relations smallest-lead-first; anything else can starve
    // short rules behind an unbounded stream of long consequences.
    void drain(std::vector<FElem>& pending) {
        size_t steps = 0;
        while (true) {
            if (++steps > 20000) throw Error("completion did not terminate within bounds");
            size_t best = pending.size();
            for (size_t i = 0; i < pending.size(); ++i) {
                pending[i] = nf(std::move(pending[i]));
                if (pending[i].is_zero()) continue;
                if (best == pending.size() ||
                    path_cmp(*pending[i].lead(), *pending[best].lead()) < 0)
                    best = i;
            }
            if (best == pending.size()) {
                pending.clear();
                return;
            }
            FElem e = std::move(pending[best]);
            pending.erase(pending.begin() + best);
            pending.erase(std::remove_if(pending.begin(), pending.end(),
                                         [](const FElem& x) { return x.is_zero(); }),
                          pending.end());
            push_rule(e, pending);
            if (rules.size() > 20000) throw Error("completion rule count exceeded bounds");
        }
    }

    void run_completion() {
        rules_by_first_.assign(quiver.n_arrows(), {});
        std::vector<FElem> pending;
        for (const auto& rel : relations) pending.push_back(rel.lhs + rel.rhs);
        drain(pending);
        // Right-hand sides are renormalized as rules arrive, which can leave a
        // previously resolved ambiguity open again; sweep all pairs until the
        // system is genuinely confluent.
        for (int sweep = 0; sweep < 64; ++sweep) {
            std::vector<FElem> fresh;
            for (size_t i = 0; i < rules.size(); ++i)
                for (size_t j = 0; j < rules.size(); ++j)
                    for_each_critical_pair(i, j, [&](const FElem& a, const FElem& b) {
                        FElem d = nf(a) + nf(b);
                        if (!d.is_zero()) fresh.push_back(std::move(d));
                    });
            if (fresh.empty()) return;
            drain(fresh);
        }
        throw Error("completion sweeps did not stabilize");
    }

    void enumerate_basis() {
        basis.clear();
        std::vector<Path> queue;
        for (size_t v = 0; v < quiver.n_vertices(); ++v)
            queue.push_back(Path::vertex(static_cast<int>(v)));
        size_t head = 0;
        while (head < queue.size()) {
            Path p = queue[head++];
            basis.push_back(p);
            for (size_t a = 0; a < quiver.n_arrows(); ++a) {
                if (quiver.arrows[a].src != p.tgt) continue;
                Path ext = p;
                ext.arrows.push_back(static_cast<int32_t>(a));
                ext.tgt = quiver.arrows[a].tgt;
                bool reducible = false;
                for (const auto& r : rules) {
                    size_t ul = r.lhs.length();
                    if (ul > ext.length()) continue;
                    if (std::equal(r.lhs.arrows.begin(), r.lhs.arrows.end(),
                                   ext.arrows.end() - ul)) {
                        reducible = true;
                        break;
                    }
                }
                if (reducible) continue;
                if (ext.length() >= max_len)
                    throw Error("not finite-dimensional within bound: irreducible path " +
                                path_str(quiver, ext));
                queue.push_back(std::move(ext));
            }
        }
        std::sort(basis.begin(), basis.end(), PathLess{});
    }
};

}  // namespace gqa
