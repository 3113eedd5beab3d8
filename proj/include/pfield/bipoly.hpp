#pragma once

// Sparse bivariate polynomials over the scalar field, ordered graded-
// lexicographically with x > y (the map iterates leading term first).
// The gcd uses content / primitive-part recursion on y over k[x], with a
// primitive pseudo-remainder sequence; no factorization anywhere.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pfield/scalar.hpp"

namespace pfield {

struct ExpPair {
    long long a = 0, b = 0; // exponents of x and y
    friend bool operator==(const ExpPair& p, const ExpPair& q) { return p.a == q.a && p.b == q.b; }
};

// graded lex with x > y, descending (leading term compares least)
struct GrlexDesc {
    bool operator()(const ExpPair& p, const ExpPair& q) const {
        long long dp = p.a + p.b, dq = q.a + q.b;
        if (dp != dq) return dp > dq;
        if (p.a != q.a) return p.a > q.a;
        return p.b > q.b;
    }
};

struct BiPoly {
    std::map<ExpPair, Scalar, GrlexDesc> terms;

    BiPoly() = default;
    explicit BiPoly(Scalar s) {
        if (!s.is_zero()) terms[{0, 0}] = std::move(s);
    }
    explicit BiPoly(int v) : BiPoly(Scalar(v)) {}

    static BiPoly monomial(Scalar coeff, long long a, long long b) {
        BiPoly p;
        if (!coeff.is_zero()) p.terms[{a, b}] = std::move(coeff);
        return p;
    }
    static BiPoly x() { return monomial(Scalar(1), 1, 0); }
    static BiPoly y() { return monomial(Scalar(1), 0, 1); }

    bool is_zero() const { return terms.empty(); }
    bool is_scalar() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == ExpPair{0, 0});
    }
    Scalar scalar_value() const {
        if (terms.empty()) return Scalar(0);
        return terms.begin()->second;
    }
    long long total_degree() const { // -1 for the zero polynomial
        if (terms.empty()) return -1;
        const ExpPair& e = terms.begin()->first;
        return e.a + e.b;
    }
    long long deg_x() const {
        long long d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.a);
        return d;
    }
    long long deg_y() const {
        long long d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.b);
        return d;
    }
    const Scalar& leading_coeff() const { return terms.begin()->second; }
    ExpPair leading_exp() const { return terms.begin()->first; }

    Scalar coeff(long long a, long long b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? Scalar(0) : it->second;
    }

    void add_term(const ExpPair& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.terms == q.terms; }
    friend bool operator!=(const BiPoly& p, const BiPoly& q) { return !(p == q); }

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [e, c] : q.terms) r.add_term(e, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [e, c] : q.terms) r.add_term(e, Scalar(0) - c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [e, c] : terms) r.terms[e] = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
        BiPoly r;
        for (const auto& [e1, c1] : p.terms)
            for (const auto& [e2, c2] : q.terms)
                r.add_term({e1.a + e2.a, e1.b + e2.b}, c1 * c2);
        return r;
    }
    friend BiPoly operator*(const Scalar& s, const BiPoly& p) {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.terms) r.terms[e] = s * c;
        return r;
    }

    BiPoly pow(unsigned e) const {
        BiPoly acc(Scalar(1)), b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    BiPoly derivative_x() const {
        BiPoly r;
        for (const auto& [e, c] : terms)
            if (e.a > 0) r.terms[{e.a - 1, e.b}] = Scalar(e.a) * c;
        return r;
    }
    BiPoly derivative_y() const {
        BiPoly r;
        for (const auto& [e, c] : terms)
            if (e.b > 0) r.terms[{e.a, e.b - 1}] = Scalar(e.b) * c;
        return r;
    }

    bool depends_on_x() const {
        for (const auto& [e, c] : terms)
            if (e.a > 0) return true;
        return false;
    }
    bool depends_on_y() const {
        for (const auto& [e, c] : terms)
            if (e.b > 0) return true;
        return false;
    }
    bool is_homogeneous() const {
        if (terms.empty()) return true;
        long long d = total_degree();
        for (const auto& [e, c] : terms)
            if (e.a + e.b != d) return false;
        return true;
    }
    // single monomial c * x^a * y^b?
    bool is_monomial() const { return terms.size() == 1; }

    BiPoly divided_by_monomial(long long a, long long b) const {
        BiPoly r;
        for (const auto& [e, c] : terms) {
            if (e.a < a || e.b < b)
                throw error(errc::invalid_argument, "monomial does not divide");
            r.terms[{e.a - a, e.b - b}] = c;
        }
        return r;
    }

    // swap the roles of x and y
    BiPoly swapped_xy() const {
        BiPoly r;
        for (const auto& [e, c] : terms) r.terms[{e.b, e.a}] = c;
        return r;
    }
};

using XPoly = Poly1<Scalar>; // univariate in x (or any single variable)

// view as a polynomial in y with coefficients in k[x]
inline std::vector<XPoly> bipoly_as_ypoly(const BiPoly& p) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [e, c] : p.terms) {
        std::size_t yb = static_cast<std::size_t>(e.b), xa = static_cast<std::size_t>(e.a);
        if (rows.size() <= yb) rows.resize(yb + 1);
        if (rows[yb].size() <= xa) rows[yb].resize(xa + 1, Scalar(0));
        rows[yb][xa] = c;
    }
    std::vector<XPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(XPoly::from_coeffs(std::move(r)));
    return out;
}

inline BiPoly bipoly_from_ypoly(const std::vector<XPoly>& rows) {
    BiPoly p;
    for (std::size_t b = 0; b < rows.size(); ++b)
        for (std::size_t a = 0; a < rows[b].c.size(); ++a)
            p.add_term({static_cast<long long>(a), static_cast<long long>(b)}, rows[b].c[a]);
    return p;
}

inline BiPoly bipoly_from_xpoly(const XPoly& p) {
    BiPoly r;
    for (std::size_t a = 0; a < p.c.size(); ++a)
        r.add_term({static_cast<long long>(a), 0}, p.c[a]);
    return r;
}

inline BiPoly bipoly_from_ypoly1(const XPoly& p) {
    BiPoly r;
    for (std::size_t b = 0; b < p.c.size(); ++b)
        r.add_term({0, static_cast<long long>(b)}, p.c[b]);
    return r;
}

// p with only x-powers (or only y-powers) as a univariate polynomial
inline std::optional<XPoly> bipoly_to_xpoly(const BiPoly& p) {
    std::vector<Scalar> c;
    for (const auto& [e, k] : p.terms) {
        if (e.b != 0) return std::nullopt;
        std::size_t a = static_cast<std::size_t>(e.a);
        if (c.size() <= a) c.resize(a + 1, Scalar(0));
        c[a] = k;
    }
    return XPoly::from_coeffs(std::move(c));
}
inline std::optional<XPoly> bipoly_to_ypoly(const BiPoly& p) {
    return bipoly_to_xpoly(p.swapped_xy());
}

namespace detail {

// ----- integer kernel: primitive pseudo-remainder sequences over Z[x] -----

using ZX = std::vector<Integer>; // univariate over Z, trailing entry nonzero

inline void zx_trim(ZX& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer zx_content(const ZX& p) {
    Integer g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline void zx_make_primitive(ZX& p) {
    Integer g = zx_content(p);
    if (g > 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

inline ZX zx_mul(const ZX& a, const ZX& b) {
    if (a.empty() || b.empty()) return {};
    ZX r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    zx_trim(r);
    return r;
}

inline ZX zx_scale(const ZX& a, const Integer& k) {
    ZX r = a;
    for (auto& c : r) c *= k;
    return r;
}

inline ZX zx_sub(const ZX& a, const ZX& b) {
    ZX r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Integer x = i < a.size() ? a[i] : Integer(0);
        Integer y = i < b.size() ? b[i] : Integer(0);
        r[i] = x - y;
    }
    zx_trim(r);
    return r;
}

// primitive gcd over Z[x] by a primitive pseudo-remainder sequence
inline ZX zx_gcd(ZX a, ZX b) {
    zx_trim(a);
    zx_trim(b);
    if (a.empty()) {
        zx_make_primitive(b);
        return b;
    }
    if (b.empty()) {
        zx_make_primitive(a);
        return a;
    }
    zx_make_primitive(a);
    zx_make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return {Integer(1)};
        // pseudo-remainder of a by b, content-stripped each elimination
        ZX r = a;
        while (r.size() >= b.size()) {
            Integer lr = r.back(), lb = b.back();
            std::size_t shift = r.size() - b.size();
            ZX scaled = zx_scale(r, lb);
            ZX sub(shift, Integer(0));
            for (const auto& c : b) sub.push_back(c * lr);
            r = zx_sub(scaled, sub);
            zx_make_primitive(r);
            if (r.empty()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    zx_make_primitive(a);
    return a;
}

inline bool xpoly_all_rational(const XPoly& p) {
    for (const auto& c : p.c)
        if (!c.is_rational()) return false;
    return true;
}

inline ZX xpoly_to_zx(const XPoly& p) {
    Integer lcm = 1;
    for (const auto& c : p.c) lcm = boost::multiprecision::lcm(lcm, rat_den(c.rational()));
    ZX out(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        const Rational& r = p.c[i].rational();
        out[i] = rat_num(r) * (lcm / rat_den(r));
    }
    zx_trim(out);
    return out;
}

inline XPoly zx_to_xpoly_monic(const ZX& p) {
    if (p.empty()) return XPoly();
    std::vector<Scalar> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Scalar(Rational(p[i], p.back()));
    return XPoly::from_coeffs(std::move(c));
}

struct YPoly { // polynomial in y over k[x]
    std::vector<XPoly> c;
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
};

// univariate gcd over the scalar field; integer kernel when possible
inline XPoly xpoly_gcd(const XPoly& a, const XPoly& b) {
    if (xpoly_all_rational(a) && xpoly_all_rational(b)) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        return zx_to_xpoly_monic(zx_gcd(xpoly_to_zx(a), xpoly_to_zx(b)));
    }
    return poly_gcd(a, b);
}

inline XPoly ypoly_content(const YPoly& p) {
    XPoly g;
    for (const auto& cf : p.c) {
        g = xpoly_gcd(g, cf);
        if (g.degree() == 0) break;
    }
    return g;
}

inline YPoly ypoly_divide_xpoly(const YPoly& p, const XPoly& d) {
    YPoly r;
    r.c.reserve(p.c.size());
    for (const auto& cf : p.c) {
        auto q = poly_divide_exact(cf, d);
        if (!q) throw error(errc::invalid_argument, "content division failed");
        r.c.push_back(*q);
    }
    return r;
}

inline YPoly ypoly_mul_xpoly(const YPoly& p, const XPoly& m) {
    YPoly r;
    r.c.reserve(p.c.size());
    for (const auto& cf : p.c) r.c.push_back(cf * m);
    r.trim();
    return r;
}

inline YPoly ypoly_sub(const YPoly& a, const YPoly& b) {
    YPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        XPoly x = i < a.c.size() ? a.c[i] : XPoly();
        XPoly y = i < b.c.size() ? b.c[i] : XPoly();
        r.c[i] = x - y;
    }
    r.trim();
    return r;
}

inline YPoly ypoly_shift(const YPoly& p, std::size_t k) { // multiply by y^k
    YPoly r;
    r.c.assign(k, XPoly());
    r.c.insert(r.c.end(), p.c.begin(), p.c.end());
    return r;
}

// pseudo-remainder of a by b in (k[x])[y]
inline YPoly ypoly_prem(YPoly a, const YPoly& b) {
    const XPoly& lb = b.c.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        XPoly la = a.c.back();
        std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        // lb * a - la * y^shift * b kills the leading term
        YPoly scaled_a = ypoly_mul_xpoly(a, lb);
        YPoly sub = ypoly_shift(ypoly_mul_xpoly(b, la), shift);
        a = ypoly_sub(scaled_a, sub);
    }
    return a;
}

inline YPoly ypoly_primitive(const YPoly& p) {
    if (p.is_zero()) return p;
    XPoly cont = ypoly_content(p);
    return ypoly_divide_xpoly(p, cont);
}

// ----- fully integer bivariate pipeline, used for rational coefficients -----

using ZY = std::vector<ZX>; // polynomial in y over Z[x]

inline void zy_trim(ZY& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

inline ZX zy_content(const ZY& p) {
    ZX g;
    for (const auto& cf : p) {
        g = zx_gcd(g, cf);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

inline ZY zy_divide_zx(const ZY& p, const ZX& d) {
    // exact division of every coefficient; d divides by construction
    ZY out;
    out.reserve(p.size());
    for (const auto& cf : p) {
        if (cf.empty()) {
            out.push_back({});
            continue;
        }
        ZX rem = cf, q(cf.size() >= d.size() ? cf.size() - d.size() + 1 : 0, Integer(0));
        while (rem.size() >= d.size() && !rem.empty()) {
            Integer f = rem.back() / d.back();
            std::size_t shift = rem.size() - d.size();
            q[shift] = f;
            ZX sub(shift, Integer(0));
            for (const auto& c : d) sub.push_back(c * f);
            rem = zx_sub(rem, sub);
        }
        out.push_back(std::move(q));
    }
    return out;
}

inline ZY zy_primitive(ZY p) {
    zy_trim(p);
    if (p.empty()) return p;
    ZX cont = zy_content(p);
    if (!(cont.size() == 1 && cont[0] == 1)) p = zy_divide_zx(p, cont);
    return p;
}

inline ZY zy_prem(ZY a, const ZY& b) {
    const ZX& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        ZX la = a.back();
        std::size_t shift = a.size() - b.size();
        ZY next(std::max(a.size(), std::size_t(0)));
        next.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) next[i] = zx_mul(a[i], lb);
        for (std::size_t i = 0; i < b.size(); ++i)
            next[shift + i] = zx_sub(next[shift + i], zx_mul(b[i], la));
        zy_trim(next);
        a = zy_primitive(std::move(next)); // keep coefficients small
    }
    return a;
}

inline ZY bipoly_to_zy(const BiPoly& p) {
    Integer lcm = 1;
    for (const auto& [e, c] : p.terms)
        lcm = boost::multiprecision::lcm(lcm, rat_den(c.rational()));
    ZY out;
    for (const auto& [e, c] : p.terms) {
        std::size_t yb = static_cast<std::size_t>(e.b), xa = static_cast<std::size_t>(e.a);
        if (out.size() <= yb) out.resize(yb + 1);
        if (out[yb].size() <= xa) out[yb].resize(xa + 1, Integer(0));
        const Rational& r = c.rational();
        out[yb][xa] = rat_num(r) * (lcm / rat_den(r));
    }
    for (auto& row : out) zx_trim(row);
    zy_trim(out);
    return out;
}

inline BiPoly zy_to_bipoly(const ZY& p) {
    BiPoly out;
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t a = 0; a < p[b].size(); ++a)
            if (p[b][a] != 0)
                out.add_term({static_cast<long long>(a), static_cast<long long>(b)},
                             Scalar(Rational(p[b][a])));
    return out;
}

inline bool bipoly_all_rational(const BiPoly& p) {
    for (const auto& [e, c] : p.terms)
        if (!c.is_rational()) return false;
    return true;
}

inline ZX zx_eval_rows(const ZY& p, const Integer& x0) {
    // p(x0, y) as an integer polynomial in y
    ZX out(p.size(), Integer(0));
    for (std::size_t b = 0; b < p.size(); ++b) {
        Integer acc = 0;
        for (std::size_t a = p[b].size(); a-- > 0;) acc = acc * x0 + p[b][a];
        out[b] = acc;
    }
    zx_trim(out);
    return out;
}

// The gcd's y-degree is bounded by the gcd degree of any x-specialization,
// so a constant specialized gcd proves the true gcd lies in k[x].
inline bool zy_specialized_coprime(const ZY& a, const ZY& b) {
    for (int x0 : {2, -3, 5}) {
        ZX ea = zx_eval_rows(a, Integer(x0));
        ZX eb = zx_eval_rows(b, Integer(x0));
        if (ea.empty() || eb.empty()) continue; // unlucky point, try another
        ZX g = zx_gcd(ea, eb);
        if (g.size() == 1) return true;
    }
    return false;
}

inline BiPoly gcd_bi_integer(const BiPoly& p, const BiPoly& q) {
    ZY A = bipoly_to_zy(p), B = bipoly_to_zy(q);
    ZX contA = zy_content(A), contB = zy_content(B);
    ZX contG = zx_gcd(contA, contB);
    ZY a = zy_divide_zx(A, contA), b = zy_divide_zx(B, contB);
    if (a.size() < b.size()) std::swap(a, b);
    if (b.size() == 1 || zy_specialized_coprime(a, b)) {
        a = ZY{ZX{Integer(1)}}; // the whole gcd is the content part
    } else {
        while (!b.empty()) {
            if (b.size() == 1) { // coprime as polynomials in y
                a = ZY{ZX{Integer(1)}};
                break;
            }
            ZY r = zy_prem(a, b);
            a = std::move(b);
            b = zy_primitive(std::move(r));
        }
        a = zy_primitive(std::move(a));
    }
    // multiply back the content gcd
    ZY g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) g[i] = zx_mul(a[i], contG);
    BiPoly out = zy_to_bipoly(g);
    return out.leading_coeff().inverse() * out;
}

} // namespace detail

// gcd of bivariate polynomials: primitive, normalized so the leading
// (grlex) coefficient is 1; divides both inputs exactly.
inline BiPoly gcd_bi(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw error(errc::invalid_argument, "gcd(0,0) undefined");
    if (p.is_zero()) {
        BiPoly r = q;
        return r.leading_coeff().inverse() * r;
    }
    if (q.is_zero()) {
        BiPoly r = p;
        return r.leading_coeff().inverse() * r;
    }
    if (p.is_scalar() || q.is_scalar()) return BiPoly(Scalar(1));
    if (p == q) {
        BiPoly r = p;
        return r.leading_coeff().inverse() * r;
    }
    // monomials reduce to exponent minima
    if (p.is_monomial() || q.is_monomial()) {
        const BiPoly& m = p.is_monomial() ? p : q;
        const BiPoly& o = p.is_monomial() ? q : p;
        ExpPair e = m.leading_exp();
        long long ax = e.a, by = e.b;
        for (const auto& [oe, oc] : o.terms) {
            ax = std::min(ax, oe.a);
            by = std::min(by, oe.b);
        }
        return BiPoly::monomial(Scalar(1), ax, by);
    }

    if (detail::bipoly_all_rational(p) && detail::bipoly_all_rational(q))
        return detail::gcd_bi_integer(p, q);

    detail::YPoly A{bipoly_as_ypoly(p)}, B{bipoly_as_ypoly(q)};
    A.trim();
    B.trim();
    XPoly contA = detail::ypoly_content(A), contB = detail::ypoly_content(B);
    XPoly contG = poly_gcd(contA, contB);
    detail::YPoly a = detail::ypoly_divide_xpoly(A, contA);
    detail::YPoly b = detail::ypoly_divide_xpoly(B, contB);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) { // coprime as y-polynomials
            a = b;
            break;
        }
        detail::YPoly r = detail::ypoly_prem(a, b);
        a = b;
        b = detail::ypoly_primitive(r);
    }
    detail::YPoly g = detail::ypoly_primitive(a);
    BiPoly result = bipoly_from_ypoly(g.c) * bipoly_from_xpoly(contG);
    return result.leading_coeff().inverse() * result;
}

// exact division of multivariate polynomials (fails => nullopt)
inline std::optional<BiPoly> divide_exact(const BiPoly& p, const BiPoly& d) {
    if (d.is_zero()) throw error(errc::division_by_zero, "division by zero polynomial");
    BiPoly r = p, q;
    ExpPair de = d.leading_exp();
    const Scalar& dc = d.leading_coeff();
    while (!r.is_zero()) {
        ExpPair re = r.leading_exp();
        if (re.a < de.a || re.b < de.b) return std::nullopt;
        Scalar f = r.leading_coeff() / dc;
        ExpPair sh{re.a - de.a, re.b - de.b};
        q.add_term(sh, f);
        for (const auto& [e, c] : d.terms) r.add_term({e.a + sh.a, e.b + sh.b}, -(f * c));
    }
    return q;
}

} // namespace pfield
