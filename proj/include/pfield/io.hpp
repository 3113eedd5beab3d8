#pragma once

// Expression front end: a recursive-descent parser for the grammar
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' exponent)?
//   atom    := INT | 'x' | 'y' | 't' | '(' expr ')'
//   exponent:= ['-'] INT | '(' ['-'] INT ')'
//
// '*' is mandatory between factors; integer exponents may be negative and
// are parsed into denominators. The canonical printer emits the same
// grammar deterministically, terms ordered graded-lexicographically with
// x before y.

#include <cctype>
#include <string>
#include <vector>

#include "pfield/ratfunc.hpp"

namespace pfield {

enum class ScalarMode { Q, Qt };

namespace detail {

struct Token {
    enum Kind { Int, VarX, VarY, VarT, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (ch) {
        case 'x': out.push_back({Token::VarX, "x", i}); break;
        case 'y': out.push_back({Token::VarY, "y", i}); break;
        case 't': out.push_back({Token::VarT, "t", i}); break;
        case '+': out.push_back({Token::Plus, "+", i}); break;
        case '-': out.push_back({Token::Minus, "-", i}); break;
        case '*': out.push_back({Token::Star, "*", i}); break;
        case '/': out.push_back({Token::Slash, "/", i}); break;
        case '^': out.push_back({Token::Caret, "^", i}); break;
        case '(': out.push_back({Token::LParen, "(", i}); break;
        case ')': out.push_back({Token::RParen, ")", i}); break;
        default: throw syntax_error(std::string("unexpected character '") + ch + "'", i);
        }
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, ScalarMode mode) : toks_(tokenize(text)), mode_(mode) {}

    RatFunc2 parse_expression() {
        RatFunc2 v = expr();
        expect(Token::End, "end of input");
        return v;
    }

    // top-level multiplicative structure: coefficient and factor bases with
    // integer exponents, without expanding the product
    struct Factors {
        Scalar sign{1};
        std::vector<std::pair<RatFunc2, long long>> parts;
    };
    Factors parse_factor_list() {
        Factors f;
        while (at(Token::Minus)) {
            ++i_;
            f.sign = -f.sign;
        }
        for (;;) {
            long long mult = 1;
            RatFunc2 base = atom();
            long long e = 1;
            if (at(Token::Caret)) {
                ++i_;
                e = exponent();
            }
            f.parts.emplace_back(base, e * mult);
            if (at(Token::Star)) {
                ++i_;
                continue;
            }
            if (at(Token::Slash)) {
                ++i_;
                base = atom();
                e = 1;
                if (at(Token::Caret)) {
                    ++i_;
                    e = exponent();
                }
                f.parts.emplace_back(base, -e);
                if (at(Token::Star) || at(Token::Slash)) {
                    if (at(Token::Star)) ++i_;
                    continue;
                }
            }
            break;
        }
        expect(Token::End, "end of input");
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    ScalarMode mode_;

    bool at(Token::Kind k) const { return toks_[i_].kind == k; }
    const Token& cur() const { return toks_[i_]; }
    void expect(Token::Kind k, const char* what) {
        if (!at(k)) throw syntax_error(std::string("expected ") + what, cur().pos);
        if (k != Token::End) ++i_;
    }

    RatFunc2 expr() {
        RatFunc2 v = term();
        while (at(Token::Plus) || at(Token::Minus)) {
            bool plus = at(Token::Plus);
            ++i_;
            RatFunc2 r = term();
            v = plus ? v + r : v - r;
        }
        return v;
    }

    RatFunc2 term() {
        RatFunc2 v = unary();
        while (at(Token::Star) || at(Token::Slash)) {
            bool mul = at(Token::Star);
            std::size_t pos = cur().pos;
            ++i_;
            RatFunc2 r = unary();
            if (mul) {
                v = v * r;
            } else {
                if (r.is_zero()) throw syntax_error("division by zero", pos);
                v = v / r;
            }
        }
        return v;
    }

    RatFunc2 unary() {
        if (at(Token::Minus)) {
            ++i_;
            return -unary();
        }
        return power();
    }

    RatFunc2 power() {
        RatFunc2 base = atom();
        if (at(Token::Caret)) {
            std::size_t pos = cur().pos;
            ++i_;
            long long e = exponent();
            if (base.is_zero() && e < 0) throw syntax_error("0 to a negative power", pos);
            return base.pow(e);
        }
        return base;
    }

    long long exponent() {
        bool neg = false, paren = false;
        if (at(Token::LParen)) {
            paren = true;
            ++i_;
        }
        if (at(Token::Minus)) {
            neg = true;
            ++i_;
        }
        if (!at(Token::Int)) throw syntax_error("expected integer exponent", cur().pos);
        long long v;
        try {
            v = std::stoll(cur().text);
        } catch (...) {
            throw syntax_error("exponent out of range", cur().pos);
        }
        ++i_;
        if (paren) expect(Token::RParen, "')'");
        return neg ? -v : v;
    }

    RatFunc2 atom() {
        switch (cur().kind) {
        case Token::Int: {
            Rational r(Integer(cur().text));
            ++i_;
            return RatFunc2(Scalar(r));
        }
        case Token::VarX: ++i_; return RatFunc2::x();
        case Token::VarY: ++i_; return RatFunc2::y();
        case Token::VarT:
            if (mode_ == ScalarMode::Q)
                throw error(errc::unknown_variable,
                            "variable t is not available in Q mode (position " +
                                std::to_string(cur().pos) + ")");
            ++i_;
            return RatFunc2(Scalar::t());
        case Token::LParen: {
            ++i_;
            RatFunc2 v = expr();
            expect(Token::RParen, "')'");
            return v;
        }
        default: throw syntax_error("expected a value", cur().pos);
        }
    }
};

} // namespace detail

inline RatFunc2 parse(const std::string& text, ScalarMode mode = ScalarMode::Q) {
    return detail::Parser(text, mode).parse_expression();
}

inline Scalar parse_scalar(const std::string& text, ScalarMode mode = ScalarMode::Q) {
    RatFunc2 v = parse(text, mode);
    if (!v.is_scalar()) throw error(errc::invalid_argument, "expected a scalar expression");
    return v.scalar_value();
}

// ---------------------------------------------------------------------------
// canonical printing

namespace detail {

inline std::string tpoly_string(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        const Rational& c = p.c[i];
        if (c == 0) continue;
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

} // namespace detail

inline std::string print_scalar(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rational());
    TPoly n = s.tnum(), d = s.tden();
    if (d.is_constant()) return detail::tpoly_string(n);
    return "(" + detail::tpoly_string(n) + ")/(" + detail::tpoly_string(d) + ")";
}

namespace detail {

inline std::string scalar_product_string(const Scalar& s) {
    // a string usable as the left factor of a '*' product
    if (s.is_rational()) return to_string(s.rational());
    TPoly n = s.tnum();
    if (s.tden().is_constant()) {
        std::size_t nonzero = 0;
        for (const auto& c : n.c)
            if (c != 0) ++nonzero;
        if (nonzero == 1 && n.lc() > 0) return tpoly_string(n); // t, 2*t^3, ...
    }
    return "(" + print_scalar(s) + ")";
}

inline std::string monomial_string(const ExpPair& e) {
    std::string out;
    if (e.a > 0) out += e.a == 1 ? "x" : "x^" + std::to_string(e.a);
    if (e.b > 0) {
        if (!out.empty()) out += "*";
        out += e.b == 1 ? "y" : "y^" + std::to_string(e.b);
    }
    return out;
}

} // namespace detail

inline std::string print_bipoly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms) { // grlex descending by map order
        bool neg = c.is_rational() && c.rational() < 0;
        Scalar a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = detail::monomial_string(e);
        if (mono.empty()) {
            out += print_scalar(a);
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += detail::scalar_product_string(a) + "*" + mono;
        }
    }
    return out;
}

inline std::string print_canonical(const RatFunc2& f) {
    if (f.is_polynomial()) return print_bipoly(f.num);
    std::string num = f.num.terms.size() == 1 ? print_bipoly(f.num)
                                              : "(" + print_bipoly(f.num) + ")";
    std::string den;
    const BiPoly& d = f.den;
    if (d.terms.size() == 1) {
        const auto& [e, c] = *d.terms.begin();
        if (c.is_one() && (e.a == 0 || e.b == 0)) den = detail::monomial_string(e);
    }
    if (den.empty()) den = "(" + print_bipoly(d) + ")";
    return num + "/" + den;
}

// univariate polynomial over the scalar field, printed in a named variable
inline std::string print_xpoly(const XPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        const Scalar& c = p.c[i];
        if (c.is_zero()) continue;
        bool neg = c.is_rational() && c.rational() < 0;
        Scalar a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty()) {
            out += print_scalar(a);
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += detail::scalar_product_string(a) + "*" + mono;
        }
    }
    return out;
}

} // namespace pfield
