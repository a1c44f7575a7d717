// The .gqa input language: algebra presentations and optional gradings.
//
//   algebra D1C3 {
//     vertices: 1;
//     arrows: a:1->1, b:1->1;
//     relations:
//       a^2 = 0;
//       b^2 = 0;
//       (a*b)^3 = (b*a)^3;
//   }
//   grading { a = 1; b = 1; }
//
// Paths are *-joined arrow names in traversal order; ^ repeats an arrow or
// a parenthesized loop; scalars are integers read as bit-polynomials over
// GF(2^m).  Relations may chain several = signs.  parse(print(m)) is the
// identity on canonical forms.

#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gqa/catalog.hpp"
#include "gqa/grading.hpp"

namespace gqa {

struct ParseError : Error {
    int line, col;
    std::string expected;
    ParseError(int line_, int col_, const std::string& msg, std::string expected_ = "")
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                msg + (expected_.empty() ? "" : " (expected " + expected_ + ")")),
          line(line_),
          col(col_),
          expected(std::move(expected_)) {}
};

struct GradingSpec {
    std::vector<std::pair<std::string, i64>> degrees;  // arrow name -> degree
};

struct Manifest {
    std::string name;
    Quiver quiver;
    std::vector<Relation> relations;
    std::optional<GradingSpec> grading;
};

namespace parse_detail {

struct Token {
    enum Kind { Word, Int, Sym, End } kind;
    std::string text;
    long long value = 0;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= s_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            bool all_digits = true;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                all_digits = all_digits && std::isdigit(static_cast<unsigned char>(s_[pos_]));
                advance();
            }
            t.text = s_.substr(start, pos_ - start);
            if (all_digits) {
                t.kind = Token::Int;
                t.value = std::stoll(t.text);
            } else {
                t.kind = Token::Word;
            }
            return t;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Token::Sym;
            t.text = "->";
            return t;
        }
        static const std::string symbols = "{}();:,^*=+-";
        if (symbols.find(c) != std::string::npos) {
            advance();
            t.kind = Token::Sym;
            t.text = std::string(1, c);
            return t;
        }
        throw ParseError(line_, col_, std::string("stray character '") + c + "'");
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& text, int field_m) : lex_(text), field_m_(field_m) { bump(); }

    Manifest parse_file() {
        Manifest m = parse_algebra();
        if (tok_.kind == Token::Word && tok_.text == "grading") {
            m.grading = parse_grading();
        }
        expect_end();
        return m;
    }

  private:
    Lexer lex_;
    Token tok_;
    int field_m_;
    Quiver* quiver_ = nullptr;

    void bump() { tok_ = lex_.next(); }
    [[noreturn]] void fail(const std::string& msg, const std::string& expected = "") {
        throw ParseError(tok_.line, tok_.col, msg, expected);
    }
    void expect_sym(const std::string& s) {
        if (tok_.kind != Token::Sym || tok_.text != s) fail("unexpected '" + tok_.text + "'", "'" + s + "'");
        bump();
    }
    void expect_word(const std::string& s) {
        if (tok_.kind != Token::Word || tok_.text != s) fail("unexpected '" + tok_.text + "'", "'" + s + "'");
        bump();
    }
    std::string take_name() {
        if (tok_.kind != Token::Word && tok_.kind != Token::Int) fail("expected a name", "identifier");
        std::string s = tok_.text;
        bump();
        return s;
    }
    long long take_int() {
        if (tok_.kind != Token::Int) fail("expected an integer", "integer");
        long long v = tok_.value;
        bump();
        return v;
    }
    void expect_end() {
        if (tok_.kind != Token::End) fail("trailing input after the manifest");
    }

    Manifest parse_algebra() {
        Manifest m;
        expect_word("algebra");
        m.name = take_name();
        expect_sym("{");
        expect_word("vertices");
        expect_sym(":");
        while (true) {
            m.quiver.vertices.push_back(take_name());
            if (tok_.kind == Token::Sym && tok_.text == ",") { bump(); continue; }
            break;
        }
        expect_sym(";");
        expect_word("arrows");
        expect_sym(":");
        while (true) {
            std::string an = take_name();
            expect_sym(":");
            std::string sv = take_name();
            expect_sym("->");
            std::string tv = take_name();
            int si = m.quiver.vertex_index(sv), ti = m.quiver.vertex_index(tv);
            if (si < 0) fail("unknown vertex " + sv);
            if (ti < 0) fail("unknown vertex " + tv);
            if (m.quiver.arrow_index(an) >= 0) fail("duplicate arrow " + an);
            m.quiver.arrows.push_back({an, si, ti});
            if (tok_.kind == Token::Sym && tok_.text == ",") { bump(); continue; }
            break;
        }
        expect_sym(";");
        expect_word("relations");
        expect_sym(":");
        quiver_ = &m.quiver;
        while (!(tok_.kind == Token::Sym && tok_.text == "}")) {
            std::vector<FElem> sides;
            sides.push_back(parse_expr());
            expect_sym("=");
            sides.push_back(parse_expr());
            while (tok_.kind == Token::Sym && tok_.text == "=") {
                bump();
                sides.push_back(parse_expr());
            }
            expect_sym(";");
            check_parallel(sides);
            for (size_t i = 1; i < sides.size(); ++i)
                m.relations.push_back({sides[0], sides[i]});
        }
        expect_sym("}");
        quiver_ = nullptr;
        return m;
    }

    void check_parallel(const std::vector<FElem>& sides) {
        const Path* ref = nullptr;
        for (const auto& s : sides)
            for (const auto& [p, c] : s.terms) {
                if (!ref) { ref = &p; continue; }
                if (p.src != ref->src || p.tgt != ref->tgt)
                    fail("relation is not parallel: term " + path_str(*quiver_, p) + " runs " +
                         quiver_->vertices[p.src] + "->" + quiver_->vertices[p.tgt] +
                         " but an earlier term runs " + quiver_->vertices[ref->src] + "->" +
                         quiver_->vertices[ref->tgt]);
            }
    }

    FElem parse_expr() {
        FElem e = parse_term();
        while (tok_.kind == Token::Sym && (tok_.text == "+" || tok_.text == "-")) {
            bump();  // char 2: '-' reads as '+'
            e += parse_term();
        }
        return e;
    }

    FElem parse_term() {
        Fq coef = Fq::one(field_m_);
        bool have_factor = false;
        Path acc;
        if (tok_.kind == Token::Int) {
            long long v = take_int();
            coef = Fq(static_cast<uint32_t>(v & 0xffff), field_m_);
            if (tok_.kind == Token::Sym && tok_.text == "*") {
                bump();
            } else {
                // a bare scalar: only 0 denotes an element (the zero element)
                if (!coef.is_zero()) fail("a bare nonzero scalar is not an element; multiply it by a path");
                return FElem{};
            }
        }
        while (true) {
            Path f = parse_factor();
            if (!have_factor) {
                acc = f;
                have_factor = true;
            } else {
                auto comp = compose(acc, f);
                if (!comp)
                    fail("arrows do not compose: " + path_str(*quiver_, acc) + " ends at " +
                         quiver_->vertices[acc.tgt] + " but " + path_str(*quiver_, f) +
                         " starts at " + quiver_->vertices[f.src]);
                acc = *comp;
            }
            if (tok_.kind == Token::Sym && tok_.text == "*") { bump(); continue; }
            break;
        }
        if (!have_factor) fail("expected a path");
        FElem e;
        e.add_term(acc, coef);
        return e;
    }

    Path parse_factor() {
        if (tok_.kind == Token::Sym && tok_.text == "(") {
            bump();
            Path inner = parse_pure_path();
            expect_sym(")");
            return maybe_power(inner);
        }
        if (tok_.kind != Token::Word) fail("expected an arrow name", "arrow");
        std::string an = tok_.text;
        int ai = quiver_->arrow_index(an);
        if (ai < 0) fail("unknown arrow " + an);
        bump();
        return maybe_power(Path::arrow(*quiver_, ai));
    }

    Path parse_pure_path() {
        Path acc = parse_factor();
        while (tok_.kind == Token::Sym && tok_.text == "*") {
            bump();
            Path f = parse_factor();
            auto comp = compose(acc, f);
            if (!comp)
                fail("arrows do not compose: " + path_str(*quiver_, acc) + " ends at " +
                     quiver_->vertices[acc.tgt] + " but " + path_str(*quiver_, f) +
                     " starts at " + quiver_->vertices[f.src]);
            acc = *comp;
        }
        return acc;
    }

    Path maybe_power(Path base) {
        if (!(tok_.kind == Token::Sym && tok_.text == "^")) return base;
        bump();
        long long e = take_int();
        if (e == 0) fail("exponent 0 is not allowed");
        if (e > 1 && base.src != base.tgt)
            fail("only loops can be raised to powers: " + path_str(*quiver_, base) + " runs " +
                 quiver_->vertices[base.src] + "->" + quiver_->vertices[base.tgt]);
        Path out = base;
        for (long long i = 1; i < e; ++i) out = *compose(out, base);
        return out;
    }

    GradingSpec parse_grading() {
        GradingSpec g;
        expect_word("grading");
        expect_sym("{");
        while (!(tok_.kind == Token::Sym && tok_.text == "}")) {
            std::string an = take_name();
            expect_sym("=");
            bool neg = false;
            if (tok_.kind == Token::Sym && tok_.text == "-") {
                neg = true;
                bump();
            }
            long long v = take_int();
            expect_sym(";");
            g.degrees.emplace_back(an, neg ? -v : v);
        }
        expect_sym("}");
        return g;
    }
};

}  // namespace parse_detail

inline Manifest parse_manifest(const std::string& text, int field_m = 1) {
    parse_detail::Parser p(text, field_m);
    return p.parse_file();
}

inline std::string print_elem_dsl(const Quiver& q, const FElem& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : e.terms) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += std::to_string(c.bits()) + "*";
        s += pretty_word(q, p);
    }
    return s;
}

inline std::string print_manifest(const Manifest& m) {
    std::ostringstream os;
    os << "algebra " << m.name << " {\n  vertices: ";
    for (size_t i = 0; i < m.quiver.vertices.size(); ++i)
        os << (i ? ", " : "") << m.quiver.vertices[i];
    os << ";\n  arrows: ";
    for (size_t i = 0; i < m.quiver.arrows.size(); ++i) {
        const auto& a = m.quiver.arrows[i];
        os << (i ? ", " : "") << a.name << ":" << m.quiver.vertices[a.src] << "->"
           << m.quiver.vertices[a.tgt];
    }
    os << ";\n  relations:\n";
    for (const auto& rel : m.relations)
        os << "    " << print_elem_dsl(m.quiver, rel.lhs) << " = "
           << print_elem_dsl(m.quiver, rel.rhs) << ";\n";
    os << "}\n";
    if (m.grading) {
        os << "grading {";
        for (const auto& [a, d] : m.grading->degrees) os << " " << a << " = " << d << ";";
        os << " }\n";
    }
    return os.str();
}

inline bool manifests_equal(const Manifest& a, const Manifest& b) {
    if (a.name != b.name) return false;
    if (a.quiver.vertices != b.quiver.vertices) return false;
    if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
    for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
        const auto& x = a.quiver.arrows[i];
        const auto& y = b.quiver.arrows[i];
        if (x.name != y.name || x.src != y.src || x.tgt != y.tgt) return false;
    }
    if (a.relations.size() != b.relations.size()) return false;
    for (size_t i = 0; i < a.relations.size(); ++i) {
        if (!(a.relations[i].lhs + b.relations[i].lhs).is_zero()) return false;
        if (!(a.relations[i].rhs + b.relations[i].rhs).is_zero()) return false;
    }
    if (a.grading.has_value() != b.grading.has_value()) return false;
    if (a.grading && a.grading->degrees != b.grading->degrees) return false;
    return true;
}

// The catalog families as manifests (for printing and round-trip checks).
inline Manifest catalog_manifest(const BlockId& id, int field_m = 1) {
    Presentation p = make_block(id, field_m);
    Manifest m;
    m.name = id.str();
    m.quiver = p.quiver;
    m.relations = p.relations;
    return m;
}

// Resolve a grading spec against a quiver.
inline IntDegrees degrees_from_spec(const Quiver& q, const GradingSpec& g) {
    IntDegrees dm = IntDegrees::zero(q.n_arrows());
    std::vector<bool> seen(q.n_arrows(), false);
    for (const auto& [name, d] : g.degrees) {
        int a = q.arrow_index(name);
        if (a < 0) throw Error("grading names unknown arrow " + name);
        if (seen[a]) throw Error("grading repeats arrow " + name);
        seen[a] = true;
        dm.deg[a] = d;
    }
    return dm;
}

}  // namespace gqa
