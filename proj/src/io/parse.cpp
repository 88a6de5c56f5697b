#include "g2dual/io/parse.hpp"

#include <cctype>

namespace g2::io {

namespace {

struct Token {
    enum class Kind { Integer, Variable, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    size_t column; // 1-based
    std::string text;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t col = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Integer, col, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            out.push_back({Token::Kind::Variable, col, std::string(1, c)});
            ++i;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '^': k = Token::Kind::Caret; break;
            case '/': k = Token::Kind::Slash; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            default:
                fail(Errc::SyntaxError,
                     "unexpected character '" + std::string(1, c) + "' at column " +
                         std::to_string(col));
        }
        out.push_back({k, col, std::string(1, c)});
        ++i;
    }
    out.push_back({Token::Kind::End, text.size() + 1, ""});
    return out;
}

PolyExpr make_literal(Rational r) {
    PolyExpr e;
    e.kind = PolyExpr::Kind::Literal;
    e.literal = std::move(r);
    return e;
}

std::unique_ptr<PolyExpr> box(PolyExpr e) { return std::make_unique<PolyExpr>(std::move(e)); }

class Parser {
public:
    Parser(std::vector<Token> tokens, const std::set<char>& vars)
        : toks_(std::move(tokens)), vars_(vars) {}

    PolyExpr parse() {
        PolyExpr e = expr();
        if (peek().kind != Token::Kind::End)
            fail(Errc::SyntaxError, "unexpected token '" + peek().text + "' at column " +
                                        std::to_string(peek().column));
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    PolyExpr expr() {
        PolyExpr lhs = term();
        for (;;) {
            if (accept(Token::Kind::Plus)) {
                PolyExpr e;
                e.kind = PolyExpr::Kind::Add;
                e.lhs = box(std::move(lhs));
                e.rhs = box(term());
                lhs = std::move(e);
            } else if (accept(Token::Kind::Minus)) {
                PolyExpr e;
                e.kind = PolyExpr::Kind::Sub;
                e.lhs = box(std::move(lhs));
                e.rhs = box(term());
                lhs = std::move(e);
            } else {
                return lhs;
            }
        }
    }

    PolyExpr term() {
        PolyExpr lhs = unary();
        while (accept(Token::Kind::Star)) {
            PolyExpr e;
            e.kind = PolyExpr::Kind::Mul;
            e.lhs = box(std::move(lhs));
            e.rhs = box(unary());
            lhs = std::move(e);
        }
        return lhs;
    }

    PolyExpr unary() {
        if (accept(Token::Kind::Minus)) {
            PolyExpr e;
            e.kind = PolyExpr::Kind::Neg;
            e.lhs = box(unary());
            return e;
        }
        return power();
    }

    PolyExpr power() {
        PolyExpr base = atom();
        if (!accept(Token::Kind::Caret)) return base;
        const Token& t = peek();
        if (t.kind == Token::Kind::Minus)
            fail(Errc::NegativeExponent,
                 "negative exponent at column " + std::to_string(t.column));
        if (t.kind != Token::Kind::Integer)
            fail(Errc::SyntaxError,
                 "integer exponent expected at column " + std::to_string(t.column));
        advance();
        if (t.text.size() > 3 || std::stoul(t.text) > 512)
            fail(Errc::SyntaxError, "exponent too large at column " + std::to_string(t.column));
        PolyExpr e;
        e.kind = PolyExpr::Kind::Pow;
        e.lhs = box(std::move(base));
        e.exponent = static_cast<unsigned>(std::stoul(t.text));
        return e;
    }

    PolyExpr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Integer: {
                advance();
                mpz_class num(t.text);
                // a '/' directly after an integer is a rational literal
                if (peek().kind == Token::Kind::Slash) {
                    advance();
                    const Token& d = peek();
                    if (d.kind != Token::Kind::Integer)
                        fail(Errc::SyntaxError, "integer denominator expected at column " +
                                                    std::to_string(d.column));
                    advance();
                    mpz_class den(d.text);
                    if (den == 0)
                        fail(Errc::ZeroDenominator,
                             "zero denominator at column " + std::to_string(d.column));
                    return make_literal(Rational(num, den));
                }
                return make_literal(Rational(num));
            }
            case Token::Kind::Variable: {
                advance();
                char v = t.text[0];
                if (vars_.find(v) == vars_.end())
                    fail(Errc::UnknownVariable, "unknown variable '" + t.text + "' at column " +
                                                    std::to_string(t.column));
                PolyExpr e;
                e.kind = PolyExpr::Kind::Variable;
                e.var = v;
                return e;
            }
            case Token::Kind::LParen: {
                advance();
                PolyExpr e = expr();
                if (!accept(Token::Kind::RParen))
                    fail(Errc::SyntaxError, "missing ')' at column " +
                                                std::to_string(peek().column));
                return e;
            }
            default:
                fail(Errc::SyntaxError, "unexpected token '" +
                                            (t.kind == Token::Kind::End ? "end of input" : t.text) +
                                            "' at column " + std::to_string(t.column));
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    const std::set<char>& vars_;
};

XPoly eval_node(const PolyExpr& e, long disc) {
    switch (e.kind) {
        case PolyExpr::Kind::Literal:
            return xconst(QuadScalar(e.literal));
        case PolyExpr::Kind::Variable:
            if (e.var == 'x') return x_poly();
            if (e.var == 't') return xconst(t_poly());
            if (e.var == 's') return xconst(QuadScalar::sqrt_of(disc));
            fail(Errc::UnknownVariable, std::string("unsupported variable '") + e.var + "'");
        case PolyExpr::Kind::Neg:
            return -eval_node(*e.lhs, disc);
        case PolyExpr::Kind::Add:
            return eval_node(*e.lhs, disc) + eval_node(*e.rhs, disc);
        case PolyExpr::Kind::Sub:
            return eval_node(*e.lhs, disc) - eval_node(*e.rhs, disc);
        case PolyExpr::Kind::Mul:
            return eval_node(*e.lhs, disc) * eval_node(*e.rhs, disc);
        case PolyExpr::Kind::Pow:
            return eval_node(*e.lhs, disc).pow(e.exponent);
    }
    fail(Errc::Internal, "unhandled expression node");
}

} // namespace

PolyExpr parse_poly(const std::string& text, const std::set<char>& allowed_vars) {
    if (text.empty()) fail(Errc::SyntaxError, "empty input");
    Parser p(lex(text), allowed_vars);
    return p.parse();
}

XPoly eval_xpoly(const PolyExpr& expr, long disc) { return eval_node(expr, disc); }

TPoly eval_tpoly(const PolyExpr& expr, long disc) {
    XPoly p = eval_node(expr, disc);
    if (!p.degree().has_value()) return TPoly();
    if (p.deg() > 0) fail(Errc::UnknownVariable, "expression must not involve x");
    const RatFunc& c = p.coeff(0);
    if (!c.is_polynomial()) fail(Errc::Internal, "unexpected denominator in t-polynomial");
    return c.num();
}

XPoly parse_xpoly(const std::string& text, long disc) {
    return eval_xpoly(parse_poly(text, {'t', 'x', 's'}), disc);
}

TPoly parse_tpoly(const std::string& text, long disc) {
    return eval_tpoly(parse_poly(text, {'t', 's'}), disc);
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(Errc::SyntaxError, "empty rational");
    return Rational::from_string(text);
}

} // namespace g2::io
