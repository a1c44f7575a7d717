// gqa: graded bound quiver algebras over GF(2^m).
//
// Subcommands: basis, dim, layers, grade {lattice|check|positive|tight},
// transfer, hr {mul|inv}, out {normalize|mul}, table.  Input is either a
// catalog block (--family/--r/--c) or a .gqa manifest file (--file).
// Exit codes: 0 success, 1 mathematical mismatch in `table`, 2 usage or
// parse errors.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqa/manifest.hpp"
#include "gqa/outer.hpp"
#include "gqa/transfer.hpp"

using json = nlohmann::ordered_json;
using namespace gqa;

namespace {

int parse_field_spec(const std::string& s) {
    // accepted: gf2, gf4, gf8, ..., gf2^m
    if (s.rfind("gf2^", 0) == 0) return std::stoi(s.substr(4));
    if (s.rfind("gf", 0) == 0) {
        long v = std::stol(s.substr(2));
        int m = 0;
        while ((1L << m) < v) ++m;
        if ((1L << m) != v) throw Error("field size must be a power of two: " + s);
        return m;
    }
    throw Error("unrecognized field spec (use gf2, gf4 or gf2^m): " + s);
}

int default_field_m() {
    if (const char* env = std::getenv("GQA_FIELD")) return parse_field_spec(env);
    return 1;
}

struct Input {
    std::string file;
    std::string family;
    int r = 0;
    int c = 0;
    std::string field;
    int max_len = 0;

    int field_m() const { return field.empty() ? default_field_m() : parse_field_spec(field); }

    bool is_catalog() const { return !family.empty(); }

    BlockId block_id() const {
        auto f = family_from_name(family);
        if (!f) throw Error("unknown family " + family + " (use A, B, C, D2A, D2B, D1C)");
        if (r <= 0) throw Error("--r must be a positive integer");
        return BlockId{*f, r, c};
    }

    std::pair<Presentation, std::optional<GradingSpec>> load() const {
        if (is_catalog()) return {make_block(block_id(), field_m()), std::nullopt};
        if (file.empty()) throw Error("provide --family or --file");
        std::ifstream in(file);
        if (!in) throw Error("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        Manifest m = parse_manifest(buf.str(), field_m());
        size_t guard = max_len > 0 ? static_cast<size_t>(max_len) : 64;
        Presentation p =
            Presentation::complete(m.quiver, m.relations, field_m(), guard);
        return {std::move(p), m.grading};
    }
};

void add_input_flags(CLI::App* cmd, Input& in) {
    cmd->add_option("--file", in.file, "a .gqa manifest file");
    cmd->add_option("--family", in.family, "catalog family: A, B, C, D2A, D2B, D1C");
    cmd->add_option("--r", in.r, "catalog parameter r");
    cmd->add_option("--c", in.c, "catalog scalar c (D2A/D2B)");
    cmd->add_option("--field", in.field, "coefficient field, e.g. gf2, gf4, gf2^3");
    cmd->add_option("--max-len", in.max_len, "saturation guard for completion");
}

IntDegrees resolve_grading(const Presentation& p, const std::string& spec,
                           const std::optional<GradingSpec>& from_file) {
    if (spec == "tight") return IntDegrees{std::vector<i64>(p.quiver.n_arrows(), 1)};
    if (spec == "trivial" || (spec.empty() && !from_file))
        return IntDegrees::zero(p.quiver.n_arrows());
    if (spec.empty()) return degrees_from_spec(p.quiver, *from_file);
    // name=deg,name=deg,...
    GradingSpec g;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("bad grading item: " + item);
        g.degrees.emplace_back(item.substr(0, eq), std::stoll(item.substr(eq + 1)));
    }
    return degrees_from_spec(p.quiver, g);
}

std::vector<Fq> parse_tuple(const std::string& s, int m) {
    std::vector<Fq> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Fq(std::stoul(item), m));
    return out;
}

std::string tuple_str(const std::vector<Fq>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].str();
    return s;
}

json grading_json(const Quiver& q, const IntDegrees& dm) {
    json j = json::object();
    for (size_t a = 0; a < q.n_arrows(); ++a) j[q.arrows[a].name] = dm.deg[a];
    return j;
}

// ---- table -----------------------------------------------------------------

struct TableCell {
    BlockId id;
    KnownProfile computed;
    KnownProfile expected;
    bool match;
};

TableCell compute_cell(BlockId id, int field_m) {
    Presentation p = make_block(id, field_m);
    GradingLattice L = grading_lattice(p);
    auto pos = positive_grading_exists(p);
    auto tv = tightness(p, /*catalog_torus_fact=*/true);
    if (tv.verdict == TightnessVerdict::Verdict::Unknown)
        throw Error("tightness undecided for catalog block " + id.str());
    KnownProfile got{L.quotient_rank >= 1, pos.status == PositiveResult::Status::Found,
                     tv.verdict == TightnessVerdict::Verdict::Tight,
                     static_cast<int>(L.quotient_rank)};
    KnownProfile want = known_profile(id);
    bool ok = got.has_nontrivial_grading == want.has_nontrivial_grading &&
              got.positive == want.positive && got.tight == want.tight &&
              got.torus_rank == want.torus_rank;
    return {id, got, want, ok};
}

int run_table(int r_max, bool as_json, int field_m) {
    std::vector<BlockId> cells;
    for (int r = 1; r <= r_max; ++r) {
        cells.push_back({Family::A, r, 0});
        cells.push_back({Family::B, r, 0});
        cells.push_back({Family::C, r, 0});
        cells.push_back({Family::D2A, r, 0});
        cells.push_back({Family::D2B, r, 0});
        cells.push_back({Family::D2A, r, 1});
        cells.push_back({Family::D2B, r, 1});
        cells.push_back({Family::D1C, r, 0});
    }
    std::vector<std::future<TableCell>> futures;
    for (auto id : cells)
        futures.push_back(std::async(std::launch::async, compute_cell, id, field_m));
    std::vector<TableCell> rows;
    for (auto& f : futures) rows.push_back(f.get());

    bool all_ok = true;
    if (as_json) {
        json out;
        out["schema"] = "gqa/1";
        out["command"] = "table";
        out["rows"] = json::array();
        for (const auto& row : rows) {
            json r;
            r["block"] = row.id.str();
            r["nontrivial"] = row.computed.has_nontrivial_grading;
            r["positive"] = row.computed.positive;
            r["tight"] = row.computed.tight;
            r["torus_rank"] = row.computed.torus_rank;
            r["matches_reference"] = row.match;
            out["rows"].push_back(r);
            all_ok = all_ok && row.match;
        }
        out["all_match"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%-10s %-10s %-9s %-7s %-11s %s\n", "block", "nontrivial", "positive",
                    "tight", "torus_rank", "reference");
        for (const auto& row : rows) {
            std::printf("%-10s %-10s %-9s %-7s %-11d %s\n", row.id.str().c_str(),
                        row.computed.has_nontrivial_grading ? "yes" : "no",
                        row.computed.positive ? "yes" : "no", row.computed.tight ? "yes" : "no",
                        row.computed.torus_rank, row.match ? "ok" : "MISMATCH");
            all_ok = all_ok && row.match;
        }
        std::printf(all_ok ? "all rows match the reference profiles\n"
                           : "MISMATCH against reference profiles\n");
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with graded dihedral-block algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    Input in;
    std::string grading_spec, vertex, edge_name, tuple1, tuple2, map_spec;
    int r_max = 5;

    auto* cmd_basis = app.add_subcommand("basis", "monomial basis of the algebra");
    add_input_flags(cmd_basis, in);
    auto* cmd_dim = app.add_subcommand("dim", "dimension of the algebra");
    add_input_flags(cmd_dim, in);
    auto* cmd_layers = app.add_subcommand("layers", "radical layers of the projectives");
    add_input_flags(cmd_layers, in);
    cmd_layers->add_option("--grading", grading_spec,
                           "tight | trivial | a=1,b=2,... (default: file grading or trivial)");
    cmd_layers->add_option("--vertex", vertex, "restrict to one projective");

    auto* cmd_grade = app.add_subcommand("grade", "grading computations");
    cmd_grade->require_subcommand(1);
    auto* g_lat = cmd_grade->add_subcommand("lattice", "homogeneity lattice and quotient");
    add_input_flags(g_lat, in);
    auto* g_chk = cmd_grade->add_subcommand("check", "is an assignment homogeneous?");
    add_input_flags(g_chk, in);
    g_chk->add_option("--grading", grading_spec, "assignment to check")->required();
    auto* g_pos = cmd_grade->add_subcommand("positive", "find a positive grading");
    add_input_flags(g_pos, in);
    auto* g_tgt = cmd_grade->add_subcommand("tight", "decide tightness");
    add_input_flags(g_tgt, in);

    auto* cmd_xfer = app.add_subcommand("transfer", "transport a grading along a tilt");
    add_input_flags(cmd_xfer, in);
    cmd_xfer->add_option("--edge", edge_name, "A-B | B-C | D2A-D2B")->required();
    cmd_xfer->add_option("--grading", grading_spec, "source grading (default tight)");

    auto* cmd_hr = app.add_subcommand("hr", "the substitution group H_r");
    cmd_hr->require_subcommand(1);
    auto* hr_mul_cmd = cmd_hr->add_subcommand("mul", "product of two tuples");
    hr_mul_cmd->add_option("--r", in.r, "number of coordinates")->required();
    hr_mul_cmd->add_option("--field", in.field, "field spec");
    hr_mul_cmd->add_option("t1", tuple1, "first tuple, comma separated")->required();
    hr_mul_cmd->add_option("t2", tuple2, "second tuple")->required();
    auto* hr_inv_cmd = cmd_hr->add_subcommand("inv", "inverse of a tuple");
    hr_inv_cmd->add_option("--r", in.r, "number of coordinates")->required();
    hr_inv_cmd->add_option("--field", in.field, "field spec");
    hr_inv_cmd->add_option("t1", tuple1, "tuple, comma separated")->required();

    auto* cmd_out = app.add_subcommand("out", "normalized outer-automorphism coordinates");
    cmd_out->require_subcommand(1);
    auto* out_norm = cmd_out->add_subcommand("normalize", "normalize an automorphism");
    add_input_flags(out_norm, in);
    out_norm->add_option("--map", map_spec, "images, e.g. \"a1 = a1 + a1*a2*b2, c = c + c^2\"")
        ->required();
    auto* out_mul = cmd_out->add_subcommand("mul", "group law on normalized tuples");
    add_input_flags(out_mul, in);
    out_mul->add_option("t1", tuple1, "first tuple")->required();
    out_mul->add_option("t2", tuple2, "second tuple")->required();

    auto* cmd_table = app.add_subcommand("table", "summary grid against reference profiles");
    cmd_table->add_option("--r-max", r_max, "largest r to include");
    cmd_table->add_option("--field", in.field, "field spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_table) return run_table(r_max, as_json, in.field_m());

        if (*cmd_basis || *cmd_dim) {
            auto [p, g] = in.load();
            if (*cmd_dim) {
                if (as_json)
                    std::cout << json{{"schema", "gqa/1"}, {"command", "dim"}, {"dim", p.dim()}}
                                     .dump()
                              << "\n";
                else
                    std::cout << p.dim() << "\n";
                return 0;
            }
            if (as_json) {
                json j;
                j["schema"] = "gqa/1";
                j["command"] = "basis";
                j["dim"] = p.dim();
                j["basis"] = json::array();
                for (const auto& b : p.basis) j["basis"].push_back(path_str(p.quiver, b));
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& b : p.basis) std::cout << path_str(p.quiver, b) << "\n";
            }
            return 0;
        }

        if (*cmd_layers) {
            auto [p, g] = in.load();
            IntDegrees dm = resolve_grading(p, grading_spec, g);
            if (!p.is_homogeneous(dm)) throw Error("grading is not homogeneous");
            json jd;
            jd["schema"] = "gqa/1";
            jd["command"] = "layers";
            jd["projectives"] = json::array();
            for (size_t v = 0; v < p.quiver.n_vertices(); ++v) {
                if (!vertex.empty() && p.quiver.vertices[v] != vertex) continue;
                auto t = p.radical_layers(static_cast<int>(v), dm);
                if (as_json) {
                    json jp;
                    jp["vertex"] = p.quiver.vertices[v];
                    jp["layers"] = json::array();
                    for (const auto& layer : t.layers) {
                        json jl = json::array();
                        for (const auto& [s, d] : layer)
                            jl.push_back({{"simple", p.quiver.vertices[s]}, {"degree", d}});
                        jp["layers"].push_back(jl);
                    }
                    jd["projectives"].push_back(jp);
                } else {
                    std::cout << "P_" << p.quiver.vertices[v] << ":\n";
                    for (size_t l = 0; l < t.layers.size(); ++l) {
                        std::cout << "  rad^" << l << ":";
                        for (const auto& [s, d] : t.layers[l])
                            std::cout << " S" << p.quiver.vertices[s] << "@" << d;
                        std::cout << "\n";
                    }
                }
            }
            if (as_json) std::cout << jd.dump(2) << "\n";
            return 0;
        }

        if (*g_lat) {
            auto [p, g] = in.load();
            GradingLattice L = grading_lattice(p);
            if (as_json) {
                json j;
                j["schema"] = "gqa/1";
                j["command"] = "grade lattice";
                j["rank"] = L.quotient_rank;
                j["torsion"] = L.torsion;
                auto vecs = [&](const IMat& M) {
                    json arr = json::array();
                    for (const auto& row : M) {
                        json jr = json::object();
                        for (size_t a = 0; a < p.quiver.n_arrows(); ++a)
                            jr[p.quiver.arrows[a].name] = row[a];
                        arr.push_back(jr);
                    }
                    return arr;
                };
                j["homogeneity_basis"] = vecs(L.h_basis);
                j["coboundary_basis"] = vecs(L.b_basis);
                j["class_generators"] = vecs(L.quotient_gens);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "rank(H/B) = " << L.quotient_rank << "\n";
                auto show = [&](const char* name, const IMat& M) {
                    std::cout << name << ":\n";
                    for (const auto& row : M) {
                        std::cout << " ";
                        for (size_t a = 0; a < p.quiver.n_arrows(); ++a)
                            std::cout << " " << p.quiver.arrows[a].name << "=" << row[a];
                        std::cout << "\n";
                    }
                };
                show("homogeneity basis", L.h_basis);
                show("coboundary basis", L.b_basis);
                show("class generators", L.quotient_gens);
            }
            return 0;
        }

        if (*g_chk) {
            auto [p, g] = in.load();
            IntDegrees dm = resolve_grading(p, grading_spec, g);
            bool hom = p.is_homogeneous(dm);
            if (as_json)
                std::cout << json{{"schema", "gqa/1"},
                                  {"command", "grade check"},
                                  {"homogeneous", hom}}
                                 .dump()
                          << "\n";
            else
                std::cout << (hom ? "homogeneous" : "not homogeneous") << "\n";
            return 0;
        }

        if (*g_pos) {
            auto [p, g] = in.load();
            auto res = positive_grading_exists(p);
            json j;
            j["schema"] = "gqa/1";
            j["command"] = "grade positive";
            if (res.status == PositiveResult::Status::Found) {
                IntDegrees dm{*res.witness};
                j["positive"] = true;
                j["witness"] = grading_json(p.quiver, dm);
                if (as_json) std::cout << j.dump(2) << "\n";
                else {
                    std::cout << "positive grading:";
                    for (size_t a = 0; a < p.quiver.n_arrows(); ++a)
                        std::cout << " " << p.quiver.arrows[a].name << "=" << res.witness->at(a);
                    std::cout << "\n";
                }
            } else if (res.status == PositiveResult::Status::None) {
                j["positive"] = false;
                if (as_json) std::cout << j.dump(2) << "\n";
                else std::cout << "no nontrivial nonnegative grading exists\n";
            } else {
                j["positive"] = nullptr;
                if (as_json) std::cout << j.dump(2) << "\n";
                else std::cout << "criterion inapplicable (parallel arrows)\n";
            }
            return 0;
        }

        if (*g_tgt) {
            auto [p, g] = in.load();
            bool catalog_fact = in.is_catalog();
            auto tv = tightness(p, catalog_fact);
            json j;
            j["schema"] = "gqa/1";
            j["command"] = "grade tight";
            switch (tv.verdict) {
                case TightnessVerdict::Verdict::Tight:
                    j["verdict"] = "TIGHT";
                    if (as_json) std::cout << j.dump() << "\n";
                    else std::cout << "TIGHT (all arrows in degree 1)\n";
                    break;
                case TightnessVerdict::Verdict::NotTight:
                    j["verdict"] = "NOT-TIGHT";
                    j["obstruction"] = tv.obstruction;
                    if (as_json) std::cout << j.dump() << "\n";
                    else std::cout << "NOT-TIGHT: " << tv.obstruction << "\n";
                    break;
                default:
                    j["verdict"] = "UNKNOWN";
                    if (as_json) std::cout << j.dump() << "\n";
                    else std::cout << "UNKNOWN (no certificate either way)\n";
            }
            return 0;
        }

        if (*cmd_xfer) {
            auto edge = edge_from_name(edge_name);
            if (!edge) throw Error("unknown edge " + edge_name + " (A-B, B-C, D2A-D2B)");
            if (in.r <= 0) throw Error("--r is required for transfer");
            int m = in.field_m();
            Presentation src = make_block({edge_source(*edge), in.r, in.c}, m);
            Presentation tgt = make_block({edge_target(*edge), in.r, in.c}, m);
            IntDegrees dm = resolve_grading(
                src, grading_spec.empty() ? std::string("tight") : grading_spec, std::nullopt);
            auto res = transfer_grading<i64>(*edge, in.r, in.c, src, dm, tgt);
            if (as_json) {
                json j = grading_json(tgt.quiver, res.target);
                if (res.alternative) j["alternative"] = grading_json(tgt.quiver, *res.alternative);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "grading on " << family_name(edge_target(*edge)) << "_" << in.r
                          << ":";
                for (size_t a = 0; a < tgt.quiver.n_arrows(); ++a)
                    std::cout << " " << tgt.quiver.arrows[a].name << "=" << res.target.deg[a];
                std::cout << "\n";
                if (res.alternative) {
                    std::cout << "equivalent alternative:";
                    for (size_t a = 0; a < tgt.quiver.n_arrows(); ++a)
                        std::cout << " " << tgt.quiver.arrows[a].name << "="
                                  << res.alternative->deg[a];
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*hr_mul_cmd || *hr_inv_cmd) {
            int m = in.field_m();
            auto mk = [&](const std::string& s) {
                HrElement h{parse_tuple(s, m)};
                if (static_cast<int>(h.a.size()) != in.r)
                    throw Error("tuple has " + std::to_string(h.a.size()) +
                                " coordinates, expected r = " + std::to_string(in.r));
                return h;
            };
            HrElement out = *hr_mul_cmd ? hr_mul(mk(tuple1), mk(tuple2)) : hr_inverse(mk(tuple1));
            if (as_json) {
                json j;
                j["schema"] = "gqa/1";
                j["command"] = *hr_mul_cmd ? "hr mul" : "hr inv";
                json arr = json::array();
                for (const auto& x : out.a) arr.push_back(x.bits());
                j["result"] = arr;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << tuple_str(out.a) << "\n";
            }
            return 0;
        }

        if (*out_norm || *out_mul) {
            BlockId id = in.block_id();
            int m = in.field_m();
            Presentation p = make_block(id, m);
            if (*out_norm) {
                // --map "a1 = expr, a2 = expr, ..."; unnamed arrows map to themselves
                Endomorphism phi = identity_endomorphism(p);
                std::string wrapped = "algebra tmp { vertices: ";
                for (size_t v = 0; v < p.quiver.n_vertices(); ++v)
                    wrapped += (v ? ", " : "") + p.quiver.vertices[v];
                wrapped += "; arrows: ";
                for (size_t a = 0; a < p.quiver.n_arrows(); ++a) {
                    const auto& ar = p.quiver.arrows[a];
                    wrapped += (a ? ", " : "") + ar.name + ":" + p.quiver.vertices[ar.src] +
                               "->" + p.quiver.vertices[ar.tgt];
                }
                wrapped += "; relations: ";
                std::stringstream ss(map_spec);
                std::string item;
                std::vector<std::pair<std::string, std::string>> entries;
                while (std::getline(ss, item, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos) throw Error("bad --map entry: " + item);
                    std::string name = item.substr(0, eq);
                    name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
                    wrapped += name + " = " + item.substr(eq + 1) + ";";
                    entries.emplace_back(name, item.substr(eq + 1));
                }
                wrapped += " }";
                Manifest mm = parse_manifest(wrapped, m);
                for (const auto& rel : mm.relations) {
                    const Path& key = rel.lhs.terms.begin()->first;
                    phi.arrow_image[key.arrows[0]] = p.nf(rel.rhs);
                }
                OuterTuple t = normalize_outer(id, p, phi);
                if (as_json) {
                    json j;
                    j["schema"] = "gqa/1";
                    j["command"] = "out normalize";
                    json d = json::array(), s = json::array();
                    for (const auto& x : t.diag) d.push_back(x.bits());
                    for (const auto& x : t.series) s.push_back(x.bits());
                    j["diag"] = d;
                    j["series"] = s;
                    if (id.family == Family::D1C) j["antidiagonal"] = t.antidiagonal;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "diag: " << tuple_str(t.diag);
                    if (!t.series.empty()) std::cout << "  series: " << tuple_str(t.series);
                    if (id.family == Family::D1C)
                        std::cout << (t.antidiagonal ? "  (antidiagonal)" : "  (diagonal)");
                    std::cout << "\n";
                }
                return 0;
            }
            // out mul: tuples are diag and series concatenated
            auto mk = [&](const std::string& s) {
                OuterTuple t;
                t.family = id.family;
                t.r = id.r;
                t.c = id.c;
                auto all = parse_tuple(s, m);
                size_t nd = id.family == Family::C ? 3 : (id.family == Family::D1C ? 2
                                                          : id.c == 1             ? 2
                                                                                  : 3);
                size_t ns = id.family == Family::D1C ? 0 : static_cast<size_t>(id.r);
                if (all.size() != nd + ns)
                    throw Error("tuple needs " + std::to_string(nd + ns) + " coordinates");
                t.diag.assign(all.begin(), all.begin() + nd);
                t.series.assign(all.begin() + nd, all.end());
                return t;
            };
            OuterTuple prod = outer_mul(mk(tuple1), mk(tuple2));
            std::vector<Fq> flat = prod.diag;
            flat.insert(flat.end(), prod.series.begin(), prod.series.end());
            if (as_json) {
                json j;
                j["schema"] = "gqa/1";
                j["command"] = "out mul";
                json arr = json::array();
                for (const auto& x : flat) arr.push_back(x.bits());
                j["result"] = arr;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << tuple_str(flat) << "\n";
            }
            return 0;
        }

        throw Error("no subcommand executed");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
