#pragma once

// The .qalg presentation format: parser, validator, serializer.
//
//   algebra NAME;
//   source "free text";                      # optional note
//   generator X even;                        # or odd
//   generator T even inverse Tinv;           # group-like inverse pair
//   relation name: [H, X] - h^-1*T + h^-1*Tinv;
//   coproduct X = X (x) 1 + 1 (x) X;
//   antipode X = -X;
//   counit X = 0;
//
// '#' starts a comment. Statements end with ';'. "(x)" is the tensor symbol,
// allowed only in coproducts. Generators declared with "inverse" carry the
// implied group-like coalgebra (Delta(T) = T (x) T, S(T) = Tinv, eps(T) = 1).

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "expression.hpp"

namespace qjord {

struct SyntaxError : ExpressionError {
    SyntaxError(int line, int col, const std::string& expected)
        : ExpressionError("syntax error at " + std::to_string(line) + ":" +
                          std::to_string(col) + ": expected " + expected),
          line(line), col(col), expected(expected) {}
    int line, col;
    std::string expected;
};
struct UnknownPresentation : ExpressionError {
    using ExpressionError::ExpressionError;
};

struct GeneratorDecl {
    std::string name;
    int parity = 0;
    std::string inverse;  // nonempty: group-like pair lead (inverse follows)
    bool is_inverse_of_pair = false;
};

struct RelationDecl {
    std::string name;
    ExprPtr expr;
};

// coproduct as a sum of signed tensor terms (left (x) right)
struct TensorTerm {
    ExprPtr left, right;
};
struct CoproductDecl {
    std::vector<TensorTerm> terms;
};

struct AlgebraPresentation {
    std::string name;
    std::string source;  // free-text note
    std::vector<GeneratorDecl> generators;
    std::vector<RelationDecl> relations;
    std::map<std::string, CoproductDecl> coproducts;
    std::map<std::string, ExprPtr> antipodes;
    std::map<std::string, ExprPtr> counits;

    std::map<std::string, int> parity_table() const {
        std::map<std::string, int> out;
        for (const auto& g : generators) out[g.name] = g.parity;
        return out;
    }
    const GeneratorDecl* find_generator(const std::string& n) const {
        for (const auto& g : generators)
            if (g.name == n) return &g;
        return nullptr;
    }
    // inverse partner for group-like pairs ("" when none)
    std::string inverse_of(const std::string& n) const {
        for (const auto& g : generators) {
            if (g.name == n && !g.inverse.empty()) return g.inverse;
            if (g.inverse == n) return g.name;
        }
        return "";
    }
    bool has_implied_coalgebra(const std::string& n) const {
        return !inverse_of(n).empty();
    }
};

namespace qalg {

struct Token {
    enum class Kind { ident, number, str, punct, end } kind;
    std::string text;
    Rational value;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : s_(src) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.text = "<eof>";
            return;
        }
        const char c = s_[pos_];
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                bump();
            tok_.kind = Token::Kind::ident;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) bump();
            tok_.kind = Token::Kind::number;
            tok_.text = s_.substr(start, pos_ - start);
            tok_.value = Rational(tok_.text);
            return;
        }
        if (c == '"') {
            bump();
            size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != '"') bump();
            tok_.kind = Token::Kind::str;
            tok_.text = s_.substr(start, pos_ - start);
            if (pos_ < s_.size()) bump();
            return;
        }
        // "(x)" tensor symbol
        if (c == '(' && pos_ + 2 < s_.size() && s_[pos_ + 1] == 'x' && s_[pos_ + 2] == ')') {
            tok_.kind = Token::Kind::punct;
            tok_.text = "(x)";
            bump(); bump(); bump();
            return;
        }
        tok_.kind = Token::Kind::punct;
        tok_.text = std::string(1, c);
        bump();
    }
    void skip_ws() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') bump();
            } else if (isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }
    void bump() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    std::string s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : lx_(src) {}

    AlgebraPresentation parse_file() {
        AlgebraPresentation p;
        expect_ident("algebra");
        p.name = expect(Token::Kind::ident, "algebra name").text;
        expect_punct(";");
        while (lx_.peek().kind != Token::Kind::end) {
            const Token t = lx_.next();
            if (t.kind != Token::Kind::ident)
                throw SyntaxError(t.line, t.col, "statement keyword");
            if (t.text == "source") {
                p.source = expect(Token::Kind::str, "quoted string").text;
                expect_punct(";");
            } else if (t.text == "generator") {
                GeneratorDecl g;
                g.name = expect(Token::Kind::ident, "generator name").text;
                const Token par = expect(Token::Kind::ident, "even|odd");
                if (par.text != "even" && par.text != "odd")
                    throw SyntaxError(par.line, par.col, "even|odd");
                g.parity = par.text == "odd" ? 1 : 0;
                if (lx_.peek().kind == Token::Kind::ident && lx_.peek().text == "inverse") {
                    lx_.next();
                    g.inverse = expect(Token::Kind::ident, "inverse name").text;
                }
                expect_punct(";");
                p.generators.push_back(g);
                if (!g.inverse.empty()) {
                    GeneratorDecl gi;
                    gi.name = g.inverse;
                    gi.parity = g.parity;
                    gi.is_inverse_of_pair = true;
                    p.generators.push_back(gi);
                }
            } else if (t.text == "relation") {
                RelationDecl r;
                r.name = expect(Token::Kind::ident, "relation name").text;
                expect_punct(":");
                r.expr = parse_expr();
                expect_punct(";");
                p.relations.push_back(std::move(r));
            } else if (t.text == "coproduct") {
                const std::string g = expect(Token::Kind::ident, "generator").text;
                expect_punct("=");
                p.coproducts[g] = parse_texpr();
                expect_punct(";");
            } else if (t.text == "antipode") {
                const std::string g = expect(Token::Kind::ident, "generator").text;
                expect_punct("=");
                p.antipodes[g] = parse_expr();
                expect_punct(";");
            } else if (t.text == "counit") {
                const std::string g = expect(Token::Kind::ident, "generator").text;
                expect_punct("=");
                p.counits[g] = parse_expr();
                expect_punct(";");
            } else {
                throw SyntaxError(t.line, t.col,
                                  "generator|relation|coproduct|antipode|counit|source");
            }
        }
        validate(p);
        return p;
    }

    ExprPtr parse_single_expr() {
        ExprPtr e = parse_expr();
        if (lx_.peek().kind != Token::Kind::end)
            throw SyntaxError(lx_.peek().line, lx_.peek().col, "end of expression");
        return e;
    }

  private:
    Token expect(Token::Kind k, const std::string& what) {
        const Token t = lx_.next();
        if (t.kind != k) throw SyntaxError(t.line, t.col, what);
        return t;
    }
    void expect_punct(const std::string& s) {
        const Token t = lx_.next();
        if (t.kind != Token::Kind::punct || t.text != s)
            throw SyntaxError(t.line, t.col, "'" + s + "'");
    }
    void expect_ident(const std::string& s) {
        const Token t = lx_.next();
        if (t.kind != Token::Kind::ident || t.text != s)
            throw SyntaxError(t.line, t.col, "'" + s + "'");
    }
    bool at_punct(const std::string& s) {
        return lx_.peek().kind == Token::Kind::punct && lx_.peek().text == s;
    }

    CoproductDecl parse_texpr() {
        CoproductDecl d;
        bool neg = false;
        if (at_punct("-")) { lx_.next(); neg = true; }
        for (;;) {
            ExprPtr l = parse_expr_noadd();
            ExprPtr r;
            if (at_punct("(x)")) {
                lx_.next();
                r = parse_expr_noadd();
            } else {
                const Token& t = lx_.peek();
                throw SyntaxError(t.line, t.col, "'(x)'");
            }
            if (neg) l = mk_neg(l);
            d.terms.push_back({l, r});
            if (at_punct("+")) { lx_.next(); neg = false; continue; }
            if (at_punct("-")) { lx_.next(); neg = true; continue; }
            break;
        }
        return d;
    }

    // additive expression
    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (at_punct("+")) { lx_.next(); e = mk_bin(Expr::Kind::add, e, parse_term()); }
            else if (at_punct("-")) { lx_.next(); e = mk_bin(Expr::Kind::sub, e, parse_term()); }
            else break;
        }
        return e;
    }
    // multiplicative expression only (tensor-term side)
    ExprPtr parse_expr_noadd() { return parse_term(); }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (at_punct("*")) { lx_.next(); e = mk_bin(Expr::Kind::mul, e, parse_factor()); }
            else if (at_punct("/")) { lx_.next(); e = mk_bin(Expr::Kind::div, e, parse_factor()); }
            else break;
        }
        return e;
    }

    ExprPtr parse_factor() {
        if (at_punct("-")) {
            lx_.next();
            return mk_neg(parse_factor());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (at_punct("^")) {
            lx_.next();
            base = mk_pow(base, parse_rational_exponent());
        }
        return base;
    }

    Rational parse_rational_exponent() {
        bool neg = false;
        bool paren = false;
        if (at_punct("(")) { lx_.next(); paren = true; }
        if (at_punct("-")) { lx_.next(); neg = true; }
        const Token n = expect(Token::Kind::number, "exponent");
        Rational v = n.value;
        if (at_punct("/")) {
            lx_.next();
            const Token d = expect(Token::Kind::number, "exponent denominator");
            v /= d.value;
        }
        if (paren) expect_punct(")");
        return neg ? Rational(-v) : v;
    }

    ExprPtr parse_atom() {
        const Token t = lx_.next();
        if (t.kind == Token::Kind::number) {
            Rational v = t.value;
            if (at_punct("/")) {
                // lookahead: "1/2" literal (denominator must be a bare number)
                lx_.next();
                const Token d = expect(Token::Kind::number, "denominator");
                v /= d.value;
            }
            auto e = mk_num(v);
            return with_pos(e, t);
        }
        if (t.kind == Token::Kind::ident) return with_pos(mk_sym(t.text), t);
        if (t.kind == Token::Kind::punct && t.text == "(") {
            ExprPtr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == Token::Kind::punct && t.text == "[") {
            ExprPtr a = parse_expr();
            expect_punct(",");
            ExprPtr b = parse_expr();
            expect_punct("]");
            return mk_bin(Expr::Kind::bracket, a, b);
        }
        if (t.kind == Token::Kind::punct && t.text == "{") {
            ExprPtr a = parse_expr();
            expect_punct(",");
            ExprPtr b = parse_expr();
            expect_punct("}");
            return mk_bin(Expr::Kind::antibracket, a, b);
        }
        throw SyntaxError(t.line, t.col, "expression atom");
    }

    static ExprPtr with_pos(ExprPtr e, const Token& t) {
        auto m = std::const_pointer_cast<Expr>(e);
        m->line = t.line;
        m->col = t.col;
        return e;
    }

    void validate(const AlgebraPresentation& p) {
        auto gp = p.parity_table();
        auto check_declared = [&](const ExprPtr& e, auto&& self) -> void {
            if (e->kind == Expr::Kind::sym && !is_scalar_symbol(e->name) &&
                gp.find(e->name) == gp.end())
                throw UndeclaredSymbol("undeclared symbol " + e->name + " in " + p.name);
            if (e->a) self(e->a, self);
            if (e->b) self(e->b, self);
        };
        for (const auto& r : p.relations) {
            check_declared(r.expr, check_declared);
            expr_parity(r.expr, gp);  // throws on inhomogeneous relation
        }
        for (const auto& [g, d] : p.coproducts) {
            if (gp.find(g) == gp.end()) throw UndeclaredSymbol("coproduct for undeclared " + g);
            for (const auto& t : d.terms) {
                check_declared(t.left, check_declared);
                check_declared(t.right, check_declared);
            }
        }
        for (const auto& [g, e] : p.antipodes) {
            if (gp.find(g) == gp.end()) throw UndeclaredSymbol("antipode for undeclared " + g);
            check_declared(e, check_declared);
        }
        for (const auto& [g, e] : p.counits) {
            if (gp.find(g) == gp.end()) throw UndeclaredSymbol("counit for undeclared " + g);
            check_declared(e, check_declared);
        }
    }

    Lexer lx_;
};

// ---- serializer (canonical form; parse . serialize = id) -----------------

inline std::string expr_to_string(const ExprPtr& e, int parent_prec = 0);

inline std::string expr_to_string_bin(const ExprPtr& e, const char* op, int prec,
                                      int parent_prec) {
    std::string s = expr_to_string(e->a, prec) + op +
                    expr_to_string(e->b, prec + 1);
    if (prec < parent_prec) return "(" + s + ")";
    return s;
}

inline std::string expr_to_string(const ExprPtr& e, int parent_prec) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::num: {
            std::string s = rat_str(e->value);
            if (e->value < 0 && parent_prec > 1) return "(" + s + ")";
            return s;
        }
        case K::sym:
            return e->name;
        case K::add: return expr_to_string_bin(e, " + ", 1, parent_prec);
        case K::sub: return expr_to_string_bin(e, " - ", 1, parent_prec);
        case K::mul: return expr_to_string_bin(e, "*", 2, parent_prec);
        case K::div: return expr_to_string_bin(e, "/", 2, parent_prec);
        case K::neg: {
            std::string s = "-" + expr_to_string(e->a, 3);
            if (parent_prec > 1) return "(" + s + ")";
            return s;
        }
        case K::pow: {
            std::string ex = rat_str(e->exponent);
            if (!is_integer(e->exponent) || e->exponent < 0) ex = "(" + ex + ")";
            return expr_to_string(e->a, 4) + "^" + ex;
        }
        case K::bracket:
            return "[" + expr_to_string(e->a) + ", " + expr_to_string(e->b) + "]";
        case K::antibracket:
            return "{" + expr_to_string(e->a) + ", " + expr_to_string(e->b) + "}";
    }
    return "?";
}

inline std::string serialize(const AlgebraPresentation& p) {
    std::ostringstream os;
    os << "algebra " << p.name << ";\n";
    if (!p.source.empty()) os << "source \"" << p.source << "\";\n";
    for (const auto& g : p.generators) {
        if (g.is_inverse_of_pair) continue;  // emitted with its lead
        os << "generator " << g.name << (g.parity ? " odd" : " even");
        if (!g.inverse.empty()) os << " inverse " << g.inverse;
        os << ";\n";
    }
    std::vector<RelationDecl> rels = p.relations;
    std::stable_sort(rels.begin(), rels.end(),
                     [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& r : rels)
        os << "relation " << r.name << ": " << expr_to_string(r.expr) << ";\n";
    for (const auto& g : p.generators) {
        auto it = p.coproducts.find(g.name);
        if (it == p.coproducts.end()) continue;
        os << "coproduct " << g.name << " = ";
        bool first = true;
        for (const auto& t : it->second.terms) {
            ExprPtr l = t.left;
            bool neg = false;
            if (l->kind == Expr::Kind::neg) { neg = true; l = l->a; }
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            os << expr_to_string(l, 2) << " (x) " << expr_to_string(t.right, 2);
            first = false;
        }
        os << ";\n";
    }
    for (const auto& g : p.generators) {
        auto it = p.antipodes.find(g.name);
        if (it == p.antipodes.end()) continue;
        os << "antipode " << g.name << " = " << expr_to_string(it->second) << ";\n";
    }
    for (const auto& g : p.generators) {
        auto it = p.counits.find(g.name);
        if (it == p.counits.end()) continue;
        os << "counit " << g.name << " = " << expr_to_string(it->second) << ";\n";
    }
    return os.str();
}

}  // namespace qalg

inline AlgebraPresentation parse_presentation(const std::string& text) {
    qalg::Parser p(text);
    return p.parse_file();
}
inline ExprPtr parse_expression(const std::string& text) {
    qalg::Parser p(text);
    return p.parse_single_expr();
}
inline std::string serialize(const AlgebraPresentation& p) { return qalg::serialize(p); }

// structural equality for round-trip checks
inline bool presentations_equal(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.name != b.name || a.source != b.source) return false;
    if (a.generators.size() != b.generators.size()) return false;
    for (size_t i = 0; i < a.generators.size(); ++i) {
        const auto& x = a.generators[i];
        const auto& y = b.generators[i];
        if (x.name != y.name || x.parity != y.parity || x.inverse != y.inverse) return false;
    }
    auto rels = [](const AlgebraPresentation& p) {
        auto r = p.relations;
        std::stable_sort(r.begin(), r.end(),
                         [](const auto& u, const auto& v) { return u.name < v.name; });
        return r;
    };
    auto ra = rels(a), rb = rels(b);
    if (ra.size() != rb.size()) return false;
    for (size_t i = 0; i < ra.size(); ++i)
        if (ra[i].name != rb[i].name || !expr_equal(ra[i].expr, rb[i].expr)) return false;
    if (a.coproducts.size() != b.coproducts.size()) return false;
    for (const auto& [g, d] : a.coproducts) {
        auto it = b.coproducts.find(g);
        if (it == b.coproducts.end() || it->second.terms.size() != d.terms.size()) return false;
        for (size_t i = 0; i < d.terms.size(); ++i)
            if (!expr_equal(d.terms[i].left, it->second.terms[i].left) ||
                !expr_equal(d.terms[i].right, it->second.terms[i].right))
                return false;
    }
    auto map_eq = [](const std::map<std::string, ExprPtr>& x,
                     const std::map<std::string, ExprPtr>& y) {
        if (x.size() != y.size()) return false;
        for (const auto& [g, e] : x) {
            auto it = y.find(g);
            if (it == y.end() || !expr_equal(e, it->second)) return false;
        }
        return true;
    };
    return map_eq(a.antipodes, b.antipodes) && map_eq(a.counits, b.counits);
}

}  // namespace qjord
