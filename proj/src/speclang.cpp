#include "kleinobs/speclang.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <sstream>
#include <thread>

namespace kleinobs {

const char* to_string(SpecErrorKind kind)
{
    switch (kind) {
    case SpecErrorKind::Syntax: return "syntax error";
    case SpecErrorKind::UnresolvedName: return "unresolved name";
    case SpecErrorKind::DimensionMismatch: return "dimension mismatch";
    case SpecErrorKind::NonRationalLiteral: return "non-rational literal";
    case SpecErrorKind::InvalidDeclaration: return "invalid declaration";
    case SpecErrorKind::UnknownEntry: return "unknown entry";
    }
    return "?";
}

SpecError::SpecError(SpecErrorKind kind, SourcePos pos, const std::string& message)
    : std::runtime_error((pos.line > 0 ? std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " : std::string()) +
                         to_string(kind) + ": " + message),
      kind_(kind), pos_(pos), message_(message)
{
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
    std::size_t begin = 0;
    std::size_t end = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (; k > 0; --k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.pos = {line, col};
        t.begin = i;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.kind = Tok::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && (src[j] == '.' || src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '.')) ++k;
                throw SpecError(SpecErrorKind::NonRationalLiteral, t.pos, "'" + src.substr(i, k - i) + "' is not an exact rational");
            }
            t.kind = Tok::Number;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (c == '"') {
            std::size_t j = i + 1;
            std::string text;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') {
                if (src[j] == '\\' && j + 1 < src.size()) ++j;
                text += src[j++];
            }
            if (j >= src.size() || src[j] != '"') throw SpecError(SpecErrorKind::Syntax, t.pos, "unterminated string");
            t.kind = Tok::String;
            t.text = text;
            advance(j + 1 - i);
        } else if (std::string("{}[](),=+-*/:").find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw SpecError(SpecErrorKind::Syntax, t.pos, std::string("unexpected character '") + c + "'");
        }
        t.end = i;
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = {line, col};
    end.begin = end.end = src.size();
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    SpecDocument document()
    {
        SpecDocument doc;
        while (peek().kind != Tok::End) doc.decls.push_back(declaration());
        return doc;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const Token& t, const std::string& what) const
    {
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw SpecError(SpecErrorKind::Syntax, t.pos, "expected " + what + ", found " + got);
    }

    bool is_punct(const char* p, std::size_t k = 0) const { return peek(k).kind == Tok::Punct && peek(k).text == p; }
    bool is_word(const char* w, std::size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == w; }

    Token punct(const char* p)
    {
        if (!is_punct(p)) fail(peek(), std::string("'") + p + "'");
        return next();
    }
    Token word(const char* w)
    {
        if (!is_word(w)) fail(peek(), std::string("'") + w + "'");
        return next();
    }
    Token ident(const char* what = "a name")
    {
        if (peek().kind != Tok::Ident) fail(peek(), what);
        return next();
    }

    // Hyphenated word with no interior whitespace, e.g. thm-main-1.
    std::string compound(SourcePos& pos)
    {
        if (peek().kind != Tok::Ident) fail(peek(), "a criterion id");
        Token first = next();
        pos = first.pos;
        std::string out = first.text;
        std::size_t end = first.end;
        while (is_punct("-") && peek().begin == end && peek(1).begin == peek().end &&
               (peek(1).kind == Tok::Ident || peek(1).kind == Tok::Number)) {
            next();
            Token part = next();
            out += "-" + part.text;
            end = part.end;
        }
        return out;
    }

    Scalar unsigned_rational()
    {
        if (peek().kind != Tok::Number) fail(peek(), "a rational literal");
        Token num = next();
        Scalar value(mpz_class(num.text));
        if (is_punct("/") && peek(1).kind == Tok::Number) {
            next();
            Token den = next();
            mpz_class d(den.text);
            if (d == 0) throw SpecError(SpecErrorKind::NonRationalLiteral, den.pos, "zero denominator");
            value /= Scalar(d);
        }
        value.canonicalize();
        return value;
    }

    Scalar signed_rational()
    {
        bool neg = false;
        if (is_punct("-")) {
            next();
            neg = true;
        }
        Scalar v = unsigned_rational();
        return neg ? Scalar(-v) : v;
    }

    LinearTerm term(bool negate)
    {
        LinearTerm t;
        t.coeff = 1;
        if (peek().kind == Tok::Number) {
            t.coeff = unsigned_rational();
            punct("*");
        }
        t.pos = peek().pos;
        t.name = ident("a basis element").text;
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    LinearExpr expression()
    {
        LinearExpr e;
        bool neg = false;
        if (is_punct("-")) {
            next();
            neg = true;
        }
        e.push_back(term(neg));
        while (is_punct("+") || is_punct("-")) {
            bool minus = next().text == "-";
            e.push_back(term(minus));
        }
        return e;
    }

    std::vector<LinearExpr> expression_list()
    {
        std::vector<LinearExpr> out;
        punct("(");
        if (!is_punct(")")) {
            out.push_back(expression());
            while (is_punct(",")) {
                next();
                out.push_back(expression());
            }
        }
        punct(")");
        return out;
    }

    SpanExpr span_expr()
    {
        SpanExpr s;
        s.pos = peek().pos;
        Token kw = ident("span, closure, stab, normalizer, centralizer or derived");
        if (kw.text == "span" || kw.text == "closure") {
            s.kind = kw.text == "span" ? SpanExpr::Kind::Span : SpanExpr::Kind::Closure;
            s.vectors = expression_list();
        } else if (kw.text == "stab" || kw.text == "normalizer" || kw.text == "centralizer") {
            s.kind = kw.text == "stab" ? SpanExpr::Kind::Stab
                     : kw.text == "normalizer" ? SpanExpr::Kind::Normalizer
                                               : SpanExpr::Kind::Centralizer;
            punct("(");
            s.ref = ident().text;
            punct(")");
        } else if (kw.text == "derived") {
            s.kind = SpanExpr::Kind::Derived;
        } else {
            fail(kw, "span, closure, stab, normalizer, centralizer or derived");
        }
        return s;
    }

    std::vector<std::vector<Scalar>> matrix_literal()
    {
        std::vector<std::vector<Scalar>> rows;
        punct("[");
        do {
            if (!rows.empty()) next();
            punct("[");
            std::vector<Scalar> row{signed_rational()};
            while (is_punct(",")) {
                next();
                row.push_back(signed_rational());
            }
            punct("]");
            rows.push_back(std::move(row));
        } while (is_punct(","));
        punct("]");
        return rows;
    }

    Decl declaration()
    {
        const Token& kw = peek();
        if (kw.kind != Tok::Ident) fail(kw, "a declaration");
        if (kw.text == "algebra") return algebra();
        if (kw.text == "subalgebra" || kw.text == "compact") {
            SubspaceDecl d;
            d.pos = kw.pos;
            d.compact = next().text == "compact";
            d.name = ident().text;
            word("of");
            d.of = ident().text;
            punct("=");
            d.value = span_expr();
            return d;
        }
        if (kw.text == "functional") {
            FunctionalDecl d;
            d.pos = next().pos;
            d.name = ident().text;
            word("on");
            d.on = ident().text;
            punct("=");
            if (is_word("killing")) {
                next();
                punct("(");
                d.killing_of = expression();
                punct(")");
            } else {
                punct("{");
                while (!is_punct("}")) {
                    if (!d.entries.empty()) punct(",");
                    std::string name = ident("a dual basis element").text;
                    punct("*");
                    punct(":");
                    d.entries.emplace_back(name, signed_rational());
                }
                punct("}");
            }
            return d;
        }
        if (kw.text == "element") {
            ElementDecl d;
            d.pos = next().pos;
            d.name = ident().text;
            word("of");
            d.of = ident().text;
            punct("=");
            d.value = expression();
            return d;
        }
        if (kw.text == "assert") {
            AssertDecl d;
            d.pos = next().pos;
            word("group_assumption");
            if (peek().kind != Tok::String) fail(peek(), "a quoted assumption");
            d.text = next().text;
            return d;
        }
        if (kw.text == "check") return check();
        fail(kw, "a declaration");
    }

    AlgebraDecl algebra()
    {
        AlgebraDecl d;
        d.pos = next().pos;
        d.name = ident().text;
        if (is_word("from")) {
            next();
            word("matrices");
            d.from_matrices = true;
            punct("{");
            word("size");
            Token sz = peek();
            if (sz.kind != Tok::Number) fail(sz, "a matrix size");
            next();
            d.size = std::stoul(sz.text);
            while (is_word("gen")) {
                MatrixGen gen;
                gen.pos = next().pos;
                gen.name = ident().text;
                punct("=");
                gen.rows = matrix_literal();
                d.gens.push_back(std::move(gen));
            }
            punct("}");
            return d;
        }
        punct("{");
        word("basis");
        while (peek().kind == Tok::Ident && peek().text != "bracket") d.basis.push_back(next().text);
        while (is_word("bracket")) {
            BracketDecl b;
            b.pos = next().pos;
            punct("[");
            b.left = ident().text;
            punct(",");
            b.right = ident().text;
            punct("]");
            punct("=");
            if (peek().kind == Tok::Number && peek().text == "0" && !is_punct("*", 1) && !is_punct("/", 1))
                next();
            else
                b.result = expression();
            d.brackets.push_back(std::move(b));
        }
        punct("}");
        return d;
    }

    CheckDecl check()
    {
        CheckDecl d;
        d.pos = next().pos;
        if (is_word("all")) {
            next();
        } else {
            for (;;) {
                SourcePos p;
                std::string id = compound(p);
                const auto& ids = criterion_ids();
                if (std::find(ids.begin(), ids.end(), id) == ids.end())
                    throw SpecError(SpecErrorKind::UnresolvedName, p, "unknown criterion '" + id + "'");
                d.criteria.push_back(id);
                if (!is_punct(",")) break;
                next();
            }
        }
        d.algebra = ident("an algebra name").text;
        punct("/");
        d.sub = ident("a subalgebra name").text;
        for (;;) {
            if (is_word("with")) {
                next();
                Token what = ident("compact, functional, element or gprime");
                std::string name = ident().text;
                if (what.text == "compact") d.compact = name;
                else if (what.text == "functional") d.functional = name;
                else if (what.text == "element") d.element = name;
                else if (what.text == "gprime") d.gprime = name;
                else fail(what, "compact, functional, element or gprime");
            } else if (is_word("solvable") && is_punct("-", 1)) {
                SourcePos p;
                std::string w = compound(p);
                if (w != "solvable-mode") throw SpecError(SpecErrorKind::Syntax, p, "expected 'solvable-mode'");
                d.solvable_mode = true;
            } else {
                break;
            }
        }
        return d;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Serializer

std::string format_expr(const LinearExpr& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        Scalar c = e[i].coeff;
        bool neg = sgn(c) < 0;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Scalar a = neg ? Scalar(-c) : c;
        if (a != 1) out += to_string(a) + "*";
        out += e[i].name;
    }
    return out;
}

std::string format_span_expr(const SpanExpr& s)
{
    switch (s.kind) {
    case SpanExpr::Kind::Span:
    case SpanExpr::Kind::Closure: {
        std::string out = s.kind == SpanExpr::Kind::Span ? "span(" : "closure(";
        for (std::size_t i = 0; i < s.vectors.size(); ++i) out += (i ? ", " : "") + format_expr(s.vectors[i]);
        return out + ")";
    }
    case SpanExpr::Kind::Stab: return "stab(" + s.ref + ")";
    case SpanExpr::Kind::Normalizer: return "normalizer(" + s.ref + ")";
    case SpanExpr::Kind::Centralizer: return "centralizer(" + s.ref + ")";
    case SpanExpr::Kind::Derived: return "derived";
    }
    return "";
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

struct Writer {
    std::ostringstream out;

    void operator()(const AlgebraDecl& d)
    {
        if (d.from_matrices) {
            out << "algebra " << d.name << " from matrices {\n  size " << d.size << "\n";
            for (const auto& g : d.gens) {
                out << "  gen " << g.name << " = [";
                for (std::size_t r = 0; r < g.rows.size(); ++r) {
                    out << (r ? ", [" : "[");
                    for (std::size_t c = 0; c < g.rows[r].size(); ++c) out << (c ? ", " : "") << to_string(g.rows[r][c]);
                    out << "]";
                }
                out << "]\n";
            }
            out << "}\n";
            return;
        }
        out << "algebra " << d.name << " {\n  basis";
        for (const auto& b : d.basis) out << " " << b;
        out << "\n";
        for (const auto& b : d.brackets)
            out << "  bracket [" << b.left << "," << b.right << "] = " << (b.result.empty() ? "0" : format_expr(b.result)) << "\n";
        out << "}\n";
    }
    void operator()(const SubspaceDecl& d)
    {
        out << (d.compact ? "compact " : "subalgebra ") << d.name << " of " << d.of << " = " << format_span_expr(d.value) << "\n";
    }
    void operator()(const FunctionalDecl& d)
    {
        out << "functional " << d.name << " on " << d.on << " = ";
        if (d.killing_of) {
            out << "killing(" << format_expr(*d.killing_of) << ")\n";
            return;
        }
        out << "{";
        for (std::size_t i = 0; i < d.entries.size(); ++i)
            out << (i ? ", " : "") << d.entries[i].first << "*: " << to_string(d.entries[i].second);
        out << "}\n";
    }
    void operator()(const ElementDecl& d) { out << "element " << d.name << " of " << d.of << " = " << format_expr(d.value) << "\n"; }
    void operator()(const AssertDecl& d) { out << "assert group_assumption " << quote(d.text) << "\n"; }
    void operator()(const CheckDecl& d)
    {
        out << "check ";
        if (d.criteria.empty()) out << "all";
        for (std::size_t i = 0; i < d.criteria.size(); ++i) out << (i ? "," : "") << d.criteria[i];
        out << " " << d.algebra << " / " << d.sub;
        if (d.compact) out << " with compact " << *d.compact;
        if (d.functional) out << " with functional " << *d.functional;
        if (d.element) out << " with element " << *d.element;
        if (d.gprime) out << " with gprime " << *d.gprime;
        if (d.solvable_mode) out << " solvable-mode";
        out << "\n";
    }
};

// ---------------------------------------------------------------------------
// Elaboration

std::string where(SourcePos p) { return std::to_string(p.line) + ":" + std::to_string(p.col); }

class Elaborator {
public:
    Elaboration run(const SpecDocument& doc)
    {
        for (const auto& d : doc.decls) std::visit([this](const auto& x) { handle(x); }, d);
        return std::move(e_);
    }

private:
    void claim(const std::string& name, SourcePos pos)
    {
        if (!names_.insert(name).second) throw SpecError(SpecErrorKind::InvalidDeclaration, pos, "'" + name + "' is already declared");
    }

    const LieAlgebra& algebra_named(const std::string& name, SourcePos pos) const
    {
        auto it = e_.algebras.find(name);
        if (it == e_.algebras.end()) throw SpecError(SpecErrorKind::UnresolvedName, pos, "no algebra named '" + name + "'");
        return it->second;
    }

    // Algebra name of an algebra or subspace declaration.
    std::string host_of(const std::string& name, SourcePos pos) const
    {
        if (e_.algebras.count(name)) return name;
        auto it = e_.subspaces.find(name);
        if (it != e_.subspaces.end()) return it->second.algebra;
        throw SpecError(SpecErrorKind::UnresolvedName, pos, "no algebra or subalgebra named '" + name + "'");
    }

    const ElaboratedSubspace& subspace_named(const std::string& name, const std::string& alg, SourcePos pos) const
    {
        auto it = e_.subspaces.find(name);
        if (it == e_.subspaces.end()) throw SpecError(SpecErrorKind::UnresolvedName, pos, "no subalgebra named '" + name + "'");
        if (it->second.algebra != alg)
            throw SpecError(SpecErrorKind::DimensionMismatch, pos, "'" + name + "' lives in " + it->second.algebra + ", not " + alg);
        return it->second;
    }

    Vector vector_of(const LieAlgebra& g, const LinearExpr& expr) const
    {
        Vector v(g.dim());
        for (const auto& t : expr) {
            auto idx = g.index_of(t.name);
            if (!idx) throw SpecError(SpecErrorKind::UnresolvedName, t.pos, "'" + t.name + "' is not a basis element of " + g.name());
            v[*idx] += t.coeff;
        }
        return v;
    }

    void handle(const AlgebraDecl& d)
    {
        claim(d.name, d.pos);
        try {
            LieAlgebra g = d.from_matrices ? matrix_closure(d) : table_algebra(d);
            e_.algebras.emplace(d.name, std::move(g));
            e_.algebra_order.push_back(d.name);
        } catch (const LieError& err) {
            throw SpecError(SpecErrorKind::InvalidDeclaration, d.pos, err.what());
        }
    }

    LieAlgebra table_algebra(const AlgebraDecl& d)
    {
        std::set<std::string> seen;
        for (const auto& b : d.basis)
            if (!seen.insert(b).second) throw SpecError(SpecErrorKind::InvalidDeclaration, d.pos, "basis element '" + b + "' repeated");
        auto index = [&](const std::string& name, SourcePos pos) {
            auto it = std::find(d.basis.begin(), d.basis.end(), name);
            if (it == d.basis.end()) throw SpecError(SpecErrorKind::UnresolvedName, pos, "'" + name + "' is not in the basis of " + d.name);
            return static_cast<std::size_t>(it - d.basis.begin());
        };
        std::vector<BracketRule> rules;
        for (const auto& b : d.brackets) {
            BracketRule r;
            r.i = index(b.left, b.pos);
            r.j = index(b.right, b.pos);
            r.result.assign(d.basis.size(), Scalar(0));
            for (const auto& t : b.result) r.result[index(t.name, t.pos)] += t.coeff;
            rules.push_back(std::move(r));
        }
        auto res = validate_algebra(d.name, d.basis, rules);
        if (!res.ok()) {
            const auto& v = res.violations.front();
            SourcePos pos = d.pos;
            for (const auto& b : d.brackets)
                if (index(b.left, b.pos) == v.i && index(b.right, b.pos) == v.j) pos = b.pos;
            throw SpecError(SpecErrorKind::InvalidDeclaration, pos, v.message);
        }
        return *res.algebra;
    }

    LieAlgebra matrix_closure(const AlgebraDecl& d)
    {
        if (d.size == 0) throw SpecError(SpecErrorKind::DimensionMismatch, d.pos, "matrix size must be positive");
        std::vector<Matrix> basis;
        std::vector<std::string> labels;
        auto flat = [](const Matrix& m) {
            std::vector<Scalar> v;
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
            return v;
        };
        auto independent = [&](const Matrix& m) {
            std::vector<std::vector<Scalar>> cols;
            for (const auto& b : basis) cols.push_back(flat(b));
            cols.push_back(flat(m));
            return rank(Matrix::from_columns(cols, d.size * d.size)) == cols.size();
        };
        std::set<std::string> used;
        for (const auto& gen : d.gens) {
            if (gen.rows.size() != d.size)
                throw SpecError(SpecErrorKind::DimensionMismatch, gen.pos, "generator " + gen.name + " has " + std::to_string(gen.rows.size()) + " rows, expected " + std::to_string(d.size));
            Matrix m(d.size, d.size);
            for (std::size_t r = 0; r < d.size; ++r) {
                if (gen.rows[r].size() != d.size)
                    throw SpecError(SpecErrorKind::DimensionMismatch, gen.pos, "generator " + gen.name + " row " + std::to_string(r + 1) + " has the wrong length");
                for (std::size_t c = 0; c < d.size; ++c) m(r, c) = gen.rows[r][c];
            }
            if (!used.insert(gen.name).second) throw SpecError(SpecErrorKind::InvalidDeclaration, gen.pos, "generator '" + gen.name + "' repeated");
            if (!independent(m)) throw SpecError(SpecErrorKind::InvalidDeclaration, gen.pos, "generator " + gen.name + " is linearly dependent on the previous ones");
            basis.push_back(m);
            labels.push_back(gen.name);
        }
        if (basis.empty()) throw SpecError(SpecErrorKind::InvalidDeclaration, d.pos, "no generators");
        std::size_t fresh = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                Matrix c = commutator(basis[j], basis[i]);
                if (c.is_zero() || !independent(c)) continue;
                std::string name;
                do name = "c" + std::to_string(++fresh);
                while (used.count(name));
                used.insert(name);
                basis.push_back(c);
                labels.push_back(name);
            }
        return matrix_algebra(d.name, labels, basis);
    }

    void handle(const SubspaceDecl& d)
    {
        claim(d.name, d.pos);
        std::string alg = host_of(d.of, d.pos);
        const LieAlgebra& g = e_.algebras.at(alg);
        ElaboratedSubspace s{alg, Subspace::zero(g.dim()), d.compact, d.pos};
        const SpanExpr& v = d.value;
        try {
            switch (v.kind) {
            case SpanExpr::Kind::Span:
            case SpanExpr::Kind::Closure: {
                std::vector<Vector> vs;
                for (const auto& x : v.vectors) vs.push_back(vector_of(g, x));
                s.space = v.kind == SpanExpr::Kind::Span ? Subspace::span(g.dim(), vs) : Subspace(subalgebra_closure(g, vs));
                break;
            }
            case SpanExpr::Kind::Stab: {
                if (auto f = e_.functionals.find(v.ref); f != e_.functionals.end()) {
                    if (f->second.first != alg) throw SpecError(SpecErrorKind::DimensionMismatch, v.pos, "'" + v.ref + "' lives on " + f->second.first);
                    s.space = stabilizer_of_functional(g, f->second.second);
                } else if (auto x = e_.elements.find(v.ref); x != e_.elements.end()) {
                    if (x->second.first != alg) throw SpecError(SpecErrorKind::DimensionMismatch, v.pos, "'" + v.ref + "' lives in " + x->second.first);
                    s.space = stabilizer_of_element(g, x->second.second);
                } else {
                    throw SpecError(SpecErrorKind::UnresolvedName, v.pos, "no functional or element named '" + v.ref + "'");
                }
                break;
            }
            case SpanExpr::Kind::Normalizer: s.space = normalizer(g, subspace_named(v.ref, alg, v.pos).space); break;
            case SpanExpr::Kind::Centralizer: s.space = centralizer(g, subspace_named(v.ref, alg, v.pos).space); break;
            case SpanExpr::Kind::Derived: s.space = derived_subalgebra(g); break;
            }
        } catch (const LieError& err) {
            throw SpecError(SpecErrorKind::InvalidDeclaration, v.pos, err.what());
        }
        e_.subspaces.emplace(d.name, std::move(s));
    }

    void handle(const FunctionalDecl& d)
    {
        claim(d.name, d.pos);
        const LieAlgebra& g = algebra_named(d.on, d.pos);
        Covector f(g.dim());
        if (d.killing_of) {
            try {
                f = killing_dual(g, vector_of(g, *d.killing_of));
            } catch (const LieError& err) {
                throw SpecError(SpecErrorKind::InvalidDeclaration, d.pos, err.what());
            }
        } else {
            for (const auto& [name, c] : d.entries) {
                auto idx = g.index_of(name);
                if (!idx) throw SpecError(SpecErrorKind::UnresolvedName, d.pos, "'" + name + "*' is not a dual basis element of " + g.name());
                f[*idx] += c;
            }
        }
        e_.functionals.emplace(d.name, std::make_pair(d.on, f));
    }

    void handle(const ElementDecl& d)
    {
        claim(d.name, d.pos);
        const LieAlgebra& g = algebra_named(d.of, d.pos);
        e_.elements.emplace(d.name, std::make_pair(d.of, vector_of(g, d.value)));
    }

    void handle(const AssertDecl& d) { e_.assumptions.push_back(d.text); }

    void handle(const CheckDecl& d)
    {
        const LieAlgebra& g = algebra_named(d.algebra, d.pos);
        CheckJob job;
        job.algebra = d.algebra;
        job.sub = d.sub;
        job.pos = d.pos;
        job.h = subspace_named(d.sub, d.algebra, d.pos).space;
        job.options.criteria = d.criteria;
        job.aux.solvable_mode = d.solvable_mode;
        job.aux.assumptions = e_.assumptions;
        if (d.compact) job.aux.compact = subspace_named(*d.compact, d.algebra, d.pos).space;
        if (d.gprime) job.aux.gprime = subspace_named(*d.gprime, d.algebra, d.pos).space;
        if (d.functional) {
            auto it = e_.functionals.find(*d.functional);
            if (it == e_.functionals.end()) throw SpecError(SpecErrorKind::UnresolvedName, d.pos, "no functional named '" + *d.functional + "'");
            if (it->second.first != d.algebra) throw SpecError(SpecErrorKind::DimensionMismatch, d.pos, "'" + *d.functional + "' lives on " + it->second.first);
            job.aux.functional = it->second.second;
        }
        if (d.element) {
            auto it = e_.elements.find(*d.element);
            if (it == e_.elements.end()) throw SpecError(SpecErrorKind::UnresolvedName, d.pos, "no element named '" + *d.element + "'");
            if (it->second.first != d.algebra) throw SpecError(SpecErrorKind::DimensionMismatch, d.pos, "'" + *d.element + "' lives in " + it->second.first);
            job.aux.element = it->second.second;
        }
        (void)g;
        e_.checks.push_back(std::move(job));
    }

    Elaboration e_;
    std::set<std::string> names_;
};

} // namespace

SpecDocument parse_spec(const std::string& text)
{
    SpecDocument doc = Parser(text).document();
    elaborate(doc);
    return doc;
}

std::string serialize_spec(const SpecDocument& doc)
{
    Writer w;
    for (std::size_t i = 0; i < doc.decls.size(); ++i) {
        bool block = std::holds_alternative<AlgebraDecl>(doc.decls[i]);
        bool prev_block = i > 0 && std::holds_alternative<AlgebraDecl>(doc.decls[i - 1]);
        if (i > 0 && (block || prev_block)) w.out << "\n";
        std::visit(w, doc.decls[i]);
    }
    return w.out.str();
}

Elaboration elaborate(const SpecDocument& doc) { return Elaborator().run(doc); }

std::vector<ObstructionReport> run_checks(const Elaboration& elab, unsigned threads,
                                          const std::optional<std::vector<std::string>>& criteria)
{
    std::vector<ObstructionReport> out(elab.checks.size());
    auto one = [&](std::size_t i) {
        const CheckJob& job = elab.checks[i];
        RunOptions opts = job.options;
        if (criteria) opts.criteria = *criteria;
        const auto& g = elab.algebra(job.algebra);
        auto rep = run_all(g, job.h, job.aux, opts);
        rep.diagnostics["directive"] = "check at " + where(job.pos);
        rep.diagnostics["subalgebra"] = job.sub + " declared at " + where(elab.subspaces.at(job.sub).pos);
        out[i] = std::move(rep);
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(out.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < out.size(); ++i) one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(out.size());
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < out.size();) {
                try {
                    one(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace kleinobs
