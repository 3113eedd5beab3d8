#pragma once

// Reduced rational functions in two variables over the scalar field.
// Invariants: den != 0, gcd(num, den) scalar, den's leading grlex
// coefficient is 1.

#include <map>
#include <utility>

#include "pfield/bipoly.hpp"

namespace pfield {

struct RatFunc2 {
    BiPoly num, den;

    RatFunc2() : num(), den(Scalar(1)) {}
    explicit RatFunc2(BiPoly n) : num(std::move(n)), den(Scalar(1)) {}
    explicit RatFunc2(Scalar s) : num(BiPoly(std::move(s))), den(Scalar(1)) {}
    explicit RatFunc2(int v) : RatFunc2(Scalar(v)) {}
    RatFunc2(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFunc2 x() { return RatFunc2(BiPoly::x()); }
    static RatFunc2 y() { return RatFunc2(BiPoly::y()); }
    static RatFunc2 laurent_monomial(Scalar c, long long a, long long b) {
        BiPoly n = BiPoly::monomial(std::move(c), a > 0 ? a : 0, b > 0 ? b : 0);
        BiPoly d = BiPoly::monomial(Scalar(1), a < 0 ? -a : 0, b < 0 ? -b : 0);
        return RatFunc2(std::move(n), std::move(d));
    }

    void reduce() {
        if (den.is_zero()) throw error(errc::division_by_zero, "zero denominator");
        if (num.is_zero()) {
            den = BiPoly(Scalar(1));
            return;
        }
        if (!den.is_scalar() && !num.is_scalar()) {
            BiPoly g = gcd_bi(num, den);
            if (!g.is_scalar()) {
                num = *divide_exact(num, g);
                den = *divide_exact(den, g);
            }
        }
        normalize_leading();
    }

    void normalize_leading() {
        Scalar lead = den.leading_coeff();
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            num = inv * num;
            den = inv * den;
        }
    }

    // assemble from parts already known to be coprime
    static RatFunc2 reduced(BiPoly n, BiPoly d) {
        RatFunc2 r;
        r.num = std::move(n);
        r.den = std::move(d);
        if (r.den.is_zero()) throw error(errc::division_by_zero, "zero denominator");
        if (r.num.is_zero()) {
            r.den = BiPoly(Scalar(1));
            return r;
        }
        r.normalize_leading();
        return r;
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_scalar(); }
    bool is_scalar() const { return num.is_scalar() && den.is_scalar(); }
    Scalar scalar_value() const { return num.scalar_value() / den.scalar_value(); }

    friend bool operator==(const RatFunc2& f, const RatFunc2& g) {
        return f.num == g.num && f.den == g.den;
    }
    friend bool operator!=(const RatFunc2& f, const RatFunc2& g) { return !(f == g); }

    // Sums and products keep the gcd work small: a product cross-cancels
    // numerators against the opposite denominators, and a sum only has to
    // clear the shared part of the two denominators.
    friend RatFunc2 operator+(const RatFunc2& f, const RatFunc2& g) {
        if (f.is_zero()) return g;
        if (g.is_zero()) return f;
        if (f.den.is_scalar() && g.den.is_scalar())
            return RatFunc2(f.num * g.den + g.num * f.den, f.den * g.den);
        BiPoly g0 = gcd_bi(f.den, g.den);
        if (g0.is_scalar()) {
            BiPoly t = f.num * g.den + g.num * f.den;
            return reduced(std::move(t), f.den * g.den);
        }
        BiPoly d1 = *divide_exact(f.den, g0), d2 = *divide_exact(g.den, g0);
        BiPoly t = f.num * d2 + g.num * d1;
        if (t.is_zero()) return RatFunc2();
        BiPoly g2 = gcd_bi(t, g0);
        if (!g2.is_scalar()) {
            t = *divide_exact(t, g2);
            g0 = *divide_exact(g0, g2);
        }
        return reduced(std::move(t), g0 * d1 * d2);
    }
    friend RatFunc2 operator-(const RatFunc2& f, const RatFunc2& g) { return f + (-g); }
    RatFunc2 operator-() const {
        RatFunc2 r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFunc2 operator*(const RatFunc2& f, const RatFunc2& g) {
        if (f.is_zero() || g.is_zero()) return RatFunc2();
        BiPoly n1 = f.num, n2 = g.num, d1 = f.den, d2 = g.den;
        if (!n1.is_scalar() && !d2.is_scalar()) {
            BiPoly c = gcd_bi(n1, d2);
            if (!c.is_scalar()) {
                n1 = *divide_exact(n1, c);
                d2 = *divide_exact(d2, c);
            }
        }
        if (!n2.is_scalar() && !d1.is_scalar()) {
            BiPoly c = gcd_bi(n2, d1);
            if (!c.is_scalar()) {
                n2 = *divide_exact(n2, c);
                d1 = *divide_exact(d1, c);
            }
        }
        return reduced(n1 * n2, d1 * d2);
    }
    friend RatFunc2 operator*(const Scalar& s, const RatFunc2& f) {
        if (s.is_zero()) return RatFunc2();
        return reduced(s * f.num, f.den);
    }
    friend RatFunc2 operator/(const RatFunc2& f, const RatFunc2& g) {
        if (g.is_zero()) throw error(errc::division_by_zero, "division by zero rational function");
        return f * g.inverse();
    }

    RatFunc2 inverse() const {
        if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
        return reduced(den, num);
    }

    RatFunc2 pow(long long e) const {
        if (e == 0) return RatFunc2(1);
        if (is_zero()) {
            if (e < 0) throw error(errc::division_by_zero, "0^negative");
            return RatFunc2();
        }
        // coprime parts stay coprime under powers
        RatFunc2 base = e < 0 ? inverse() : *this;
        unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
        return reduced(base.num.pow(k), base.den.pow(k));
    }

    bool depends_on_x() const { return num.depends_on_x() || den.depends_on_x(); }
    bool depends_on_y() const { return num.depends_on_y() || den.depends_on_y(); }

    RatFunc2 swapped_xy() const { return RatFunc2(num.swapped_xy(), den.swapped_xy()); }
};

enum class Var { x, y };

// quotient-rule-exact partial derivative; scalars (including t) are constants
inline RatFunc2 partial_derivative(const RatFunc2& f, Var v) {
    BiPoly dn = v == Var::x ? f.num.derivative_x() : f.num.derivative_y();
    BiPoly dd = v == Var::x ? f.den.derivative_x() : f.den.derivative_y();
    if (f.den.is_scalar()) return RatFunc2(std::move(dn));
    if (dd.is_zero()) return RatFunc2(std::move(dn), f.den);
    // split off gcd(d, d_v) so the remaining reduction stays small
    BiPoly g = gcd_bi(f.den, dd);
    if (g.is_scalar()) return RatFunc2(dn * f.den - f.num * dd, f.den * f.den);
    BiPoly u = *divide_exact(f.den, g), w = *divide_exact(dd, g);
    return RatFunc2(dn * u - f.num * w, f.den * u);
}

namespace detail {

inline RatFunc2 eval_bipoly_at(const BiPoly& p, const RatFunc2& X, const RatFunc2& Y) {
    // cache powers of X and Y
    std::map<long long, RatFunc2> xp{{0, RatFunc2(1)}}, yp{{0, RatFunc2(1)}};
    auto power = [](std::map<long long, RatFunc2>& cache, const RatFunc2& base, long long e) {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        RatFunc2 r = base.pow(e);
        cache.emplace(e, r);
        return r;
    };
    RatFunc2 acc;
    for (const auto& [e, c] : p.terms)
        acc = acc + Scalar(c) * (power(xp, X, e.a) * power(yp, Y, e.b));
    return acc;
}

} // namespace detail

// exact composition f(imageX, imageY); rejects substitutions that send the
// denominator to zero identically
inline RatFunc2 substitute(const RatFunc2& f, const RatFunc2& imageX, const RatFunc2& imageY) {
    RatFunc2 dn = detail::eval_bipoly_at(f.den, imageX, imageY);
    if (dn.is_zero())
        throw error(errc::indeterminate_result, "substitution makes the denominator vanish");
    RatFunc2 nm = detail::eval_bipoly_at(f.num, imageX, imageY);
    return nm / dn;
}

enum class RingOp { add, sub, mul, div };

inline RatFunc2 ring_ops(const RatFunc2& lhs, const RatFunc2& rhs, RingOp op) {
    switch (op) {
    case RingOp::add: return lhs + rhs;
    case RingOp::sub: return lhs - rhs;
    case RingOp::mul: return lhs * rhs;
    case RingOp::div: return lhs / rhs;
    }
    throw error(errc::invalid_argument, "bad ring op");
}

} // namespace pfield
