#include "qmu/parser.hpp"

#include <cctype>

namespace qmu {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Mul, Div, Pow, Star, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    Rat value;
    size_t pos = 0;
};

struct Lexer {
    std::string src;
    size_t i = 0;
    std::vector<Token> tokens;

    void run() {
        bool prev_ident = false;  // identifier immediately before, no gap
        while (i < src.size()) {
            char ch = src[i];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
                prev_ident = false;
                continue;
            }
            size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                    num += src[i++];
                std::string den;
                if (i < src.size() && src[i] == '/' && i + 1 < src.size() &&
                    std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
                    ++i;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                        den += src[i++];
                }
                Rat v = den.empty() ? Rat(mpz_class(num)) : Rat(mpz_class(num), mpz_class(den));
                v.canonicalize();
                tokens.push_back({Tok::Number, num + (den.empty() ? "" : "/" + den), v, start});
                prev_ident = false;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string id;
                // x-1, x0, x1 are single identifiers
                if (ch == 'x' && i + 1 < src.size() &&
                    (src[i + 1] == '0' || src[i + 1] == '1' ||
                     (src[i + 1] == '-' && i + 2 < src.size() && src[i + 2] == '1'))) {
                    id = "x";
                    ++i;
                    if (src[i] == '-') {
                        id += src[i++];
                    }
                    id += src[i++];
                } else {
                    while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                              src[i] == '_'))
                        id += src[i++];
                }
                tokens.push_back({Tok::Ident, id, Rat(0), start});
                prev_ident = true;
                continue;
            }
            switch (ch) {
                case '+':
                    tokens.push_back({Tok::Plus, "+", Rat(0), start});
                    break;
                case '-':
                    tokens.push_back({Tok::Minus, "-", Rat(0), start});
                    break;
                case '*':
                    // adjacency rule: a star glued to an identifier is the involution
                    tokens.push_back({prev_ident ? Tok::Star : Tok::Mul, "*", Rat(0), start});
                    break;
                case '/':
                    tokens.push_back({Tok::Div, "/", Rat(0), start});
                    break;
                case '^':
                    tokens.push_back({Tok::Pow, "^", Rat(0), start});
                    break;
                case '(':
                    tokens.push_back({Tok::LParen, "(", Rat(0), start});
                    break;
                case ')':
                    tokens.push_back({Tok::RParen, ")", Rat(0), start});
                    break;
                default:
                    throw ParseError(std::string("unexpected character '") + ch + "'", start);
            }
            prev_ident = false;
            ++i;
        }
        tokens.push_back({Tok::End, "", Rat(0), src.size()});
    }
};

struct Value {
    bool is_scalar = true;
    Scalar s;
    NCPoly p;

    static Value scalar(Scalar v) { return {true, std::move(v), NCPoly()}; }
    static Value poly(NCPoly v) { return {false, Scalar(), std::move(v)}; }
};

struct Evaluator {
    Alg alg;
    const Workspace& ws;
    const Presentation& pres() const {
        return alg == Alg::SU2 ? ws.su2().pres() : ws.uq().pres();
    }

    Value add(const Value& a, const Value& b, bool negate_b) const {
        if (a.is_scalar && b.is_scalar)
            return Value::scalar(negate_b ? a.s - b.s : a.s + b.s);
        NCPoly pa = a.is_scalar ? NCPoly::unit(alg) * a.s : a.p;
        NCPoly pb = b.is_scalar ? NCPoly::unit(alg) * b.s : b.p;
        return Value::poly(negate_b ? pa - pb : pa + pb);
    }
    Value mul(const Value& a, const Value& b) const {
        if (a.is_scalar && b.is_scalar) return Value::scalar(a.s * b.s);
        if (a.is_scalar) return Value::poly(b.p * a.s);
        if (b.is_scalar) return Value::poly(a.p * b.s);
        return Value::poly(nc_mul(pres(), a.p, b.p));
    }
    Value div(const Value& a, const Value& b, size_t pos) const {
        if (!b.is_scalar) throw ParseError("division by an algebra element", pos);
        if (b.s.is_zero()) throw ParseError("division by a scalar that normalizes to zero", pos);
        if (a.is_scalar) return Value::scalar(a.s / b.s);
        return Value::poly(a.p * b.s.inverse());
    }
    Value star(const Value& a) const {
        if (a.is_scalar) return Value::scalar(a.s.conj());
        return Value::poly(nc_star(pres(), a.p));
    }
    Value pow(const Value& a, int e, size_t pos) const {
        if (a.is_scalar) {
            Scalar base = a.s;
            if (e < 0) {
                if (base.is_zero()) throw ParseError("negative power of zero", pos);
                base = base.inverse();
                e = -e;
            }
            Scalar acc(1);
            for (int k = 0; k < e; ++k) acc *= base;
            return Value::scalar(acc);
        }
        if (e < 0) throw ParseError("negative power of an algebra element", pos);
        NCPoly acc = NCPoly::unit(alg);
        for (int k = 0; k < e; ++k) acc = nc_mul(pres(), acc, a.p);
        return Value::poly(acc);
    }

    Value ident(const std::string& name, size_t pos) const {
        if (alg == Alg::SU2) {
            using namespace su2;
            if (name == "a") return Value::poly(NCPoly::generator(Alg::SU2, a));
            if (name == "g") return Value::poly(NCPoly::generator(Alg::SU2, g));
            const SphereEmbedding& e = ws.sphere();
            if (name == "A") return Value::poly(e.A);
            if (name == "B") return Value::poly(e.B);
            if (name == "x-1") return Value::poly(e.x_m1);
            if (name == "x0") return Value::poly(e.x_0);
            if (name == "x1") return Value::poly(e.x_1);
            const SOmu3Generators& so3 = ws.so3();
            if (name == "N") return Value::poly(so3.N);
            if (name == "M") return Value::poly(so3.M);
            if (name == "C") return Value::poly(so3.C);
            if (name == "G") return Value::poly(so3.G);
            if (name == "L") return Value::poly(so3.L);
        } else {
            using namespace uq;
            if (name == "E") return Value::poly(NCPoly::generator(Alg::UQ, E));
            if (name == "F") return Value::poly(NCPoly::generator(Alg::UQ, F));
            if (name == "K") return Value::poly(NCPoly::generator(Alg::UQ, K));
            if (name == "Kinv") return Value::poly(NCPoly::generator(Alg::UQ, Kinv));
        }
        try {
            return Value::scalar(named_scalar(name, ws.tower()));
        } catch (const std::domain_error&) {
            throw ParseError("unknown identifier '" + name + "'", pos);
        }
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;
    Evaluator ev;

    const Token& peek() const { return toks[pos]; }
    Token next() { return toks[pos++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos;
            return true;
        }
        return false;
    }

    Value parse_expr() {
        Value v = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Value rhs = parse_term();
            v = ev.add(v, rhs, minus);
        }
        return v;
    }

    // term := factor (factor | '*' factor | '/' factor)*
    Value parse_term() {
        Value v = parse_factor();
        for (;;) {
            Tok k = peek().kind;
            if (k == Tok::Mul) {
                ++pos;
                v = ev.mul(v, parse_factor());
            } else if (k == Tok::Div) {
                size_t at = peek().pos;
                ++pos;
                v = ev.div(v, parse_factor(), at);
            } else if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen) {
                v = ev.mul(v, parse_factor());  // juxtaposition
            } else {
                break;
            }
        }
        return v;
    }

    Value parse_factor() {
        if (accept(Tok::Minus)) return ev.mul(Value::scalar(Scalar(-1)), parse_factor());
        Value v = parse_primary();
        if (peek().kind == Tok::Pow) {
            size_t at = peek().pos;
            ++pos;
            bool neg = accept(Tok::Minus);
            if (peek().kind != Tok::Number || peek().value.get_den() != 1)
                throw ParseError("integer exponent expected", peek().pos);
            long e = static_cast<long>(peek().value.get_num().get_si());
            ++pos;
            v = ev.pow(v, static_cast<int>(neg ? -e : e), at);
        }
        return v;
    }

    Value parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                ++pos;
                return Value::scalar(Scalar(t.value));
            }
            case Tok::Ident: {
                Token id = next();
                Value v = ev.ident(id.text, id.pos);
                while (accept(Tok::Star)) v = ev.star(v);
                return v;
            }
            case Tok::LParen: {
                ++pos;
                Value v = parse_expr();
                if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
                return v;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }
};

}  // namespace

Parsed parse_expr(const std::string& text, Alg alg, const Workspace& ws) {
    Lexer lex{text};
    lex.run();
    Parser parser{std::move(lex.tokens), 0, Evaluator{alg, ws}};
    Value v = parser.parse_expr();
    if (parser.peek().kind != Tok::End)
        throw ParseError("trailing input '" + parser.peek().text + "'", parser.peek().pos);
    Parsed out;
    out.is_scalar = v.is_scalar;
    if (v.is_scalar)
        out.scalar = v.s;
    else
        out.poly = v.p;
    return out;
}

namespace {

// Scalar-only recursive descent over the same token stream; produces the
// expression tree consumed by scalar_normalize.
struct ScalarParser {
    std::vector<Token> toks;
    size_t pos = 0;

    using Node = std::shared_ptr<ScalarExpr>;
    const Token& peek() const { return toks[pos]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos;
            return true;
        }
        return false;
    }

    Node parse_expr() {
        Node v = parse_term();
        for (;;) {
            if (accept(Tok::Plus))
                v = ScalarExpr::binary(ScalarExpr::Kind::Add, v, parse_term());
            else if (accept(Tok::Minus))
                v = ScalarExpr::binary(ScalarExpr::Kind::Sub, v, parse_term());
            else
                break;
        }
        return v;
    }
    Node parse_term() {
        Node v = parse_factor();
        for (;;) {
            Tok k = peek().kind;
            if (k == Tok::Mul || k == Tok::Star) {
                ++pos;
                v = ScalarExpr::binary(ScalarExpr::Kind::Mul, v, parse_factor());
            } else if (k == Tok::Div) {
                ++pos;
                v = ScalarExpr::binary(ScalarExpr::Kind::Div, v, parse_factor());
            } else if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen) {
                v = ScalarExpr::binary(ScalarExpr::Kind::Mul, v, parse_factor());
            } else {
                break;
            }
        }
        return v;
    }
    Node parse_factor() {
        if (accept(Tok::Minus)) return ScalarExpr::neg(parse_factor());
        Node v = parse_primary();
        if (accept(Tok::Pow)) {
            bool neg = accept(Tok::Minus);
            if (peek().kind != Tok::Number || peek().value.get_den() != 1)
                throw ParseError("integer exponent expected", peek().pos);
            long e = static_cast<long>(peek().value.get_num().get_si());
            ++pos;
            v = ScalarExpr::pow(v, static_cast<int>(neg ? -e : e));
        }
        return v;
    }
    Node parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            ++pos;
            return ScalarExpr::rational(t.value);
        }
        if (t.kind == Tok::Ident) {
            ++pos;
            return ScalarExpr::constant(t.text);
        }
        if (accept(Tok::LParen)) {
            Node v = parse_expr();
            if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
            return v;
        }
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
};

}  // namespace

std::shared_ptr<ScalarExpr> parse_scalar_expr(const std::string& text) {
    Lexer lex{text};
    lex.run();
    ScalarParser parser{std::move(lex.tokens), 0};
    auto v = parser.parse_expr();
    if (parser.peek().kind != Tok::End)
        throw ParseError("trailing input '" + parser.peek().text + "'", parser.peek().pos);
    return v;
}

}  // namespace qmu
