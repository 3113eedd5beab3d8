#pragma once

// The ground field of the library: either Q (plain rationals) or Q(t),
// univariate rational functions in a parameter t with rational coefficients.
// A Scalar stores the Q(t) representation only when it genuinely involves t;
// constants always collapse to the rational branch, so is_rational() doubles
// as the "t-free" test. Q(t) values are kept reduced with monic denominator.

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "pfield/poly1.hpp"
#include "pfield/rational.hpp"

namespace pfield {

using TPoly = Poly1<Rational>;

class Scalar {
public:
    Scalar() : rat_(0) {}
    Scalar(int v) : rat_(v) {}
    Scalar(long long v) : rat_(v) {}
    Scalar(Rational r) : rat_(std::move(r)) {}
    Scalar(const Integer& n, const Integer& d) : rat_(Rational(n, d)) {}

    static Scalar t() { return Scalar(TPoly::variable(), TPoly(Rational(1))); }

    // num/den in t; reduces, normalizes, and demotes constants.
    Scalar(TPoly num, TPoly den) {
        if (den.is_zero()) throw error(errc::division_by_zero, "zero denominator in Q(t) scalar");
        TPoly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = *poly_divide_exact(num, g);
            den = *poly_divide_exact(den, g);
        }
        Rational lead = den.lc();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num = inv * num;
            den = inv * den;
        }
        if (num.is_constant() && den.is_constant()) {
            rat_ = num.is_zero() ? Rational(0) : num.c[0];
        } else {
            tnum_ = std::move(num);
            tden_ = std::move(den);
            has_t_ = true;
        }
    }

    bool is_rational() const { return !has_t_; }
    const Rational& rational() const {
        if (has_t_) throw error(errc::invalid_argument, "scalar depends on t");
        return rat_;
    }
    // Q(t) view; valid for rational scalars too.
    TPoly tnum() const { return has_t_ ? tnum_ : TPoly(rat_); }
    TPoly tden() const { return has_t_ ? tden_ : TPoly(Rational(1)); }

    bool is_zero() const { return !has_t_ && rat_ == 0; }
    bool is_one() const { return !has_t_ && rat_ == 1; }
    bool is_integer_value() const { return !has_t_ && pfield::is_integer(rat_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.has_t_ != b.has_t_) return false;
        if (!a.has_t_) return a.rat_ == b.rat_;
        return a.tnum_ == b.tnum_ && a.tden_ == b.tden_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (!a.has_t_ && !b.has_t_) return Scalar(a.rat_ + b.rat_);
        return Scalar(a.tnum() * b.tden() + b.tnum() * a.tden(), a.tden() * b.tden());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (!a.has_t_ && !b.has_t_) return Scalar(a.rat_ - b.rat_);
        return Scalar(a.tnum() * b.tden() - b.tnum() * a.tden(), a.tden() * b.tden());
    }
    Scalar operator-() const { return Scalar(0) - *this; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (!a.has_t_ && !b.has_t_) return Scalar(a.rat_ * b.rat_);
        return Scalar(a.tnum() * b.tnum(), a.tden() * b.tden());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw error(errc::division_by_zero, "scalar division by zero");
        if (!a.has_t_ && !b.has_t_) return Scalar(a.rat_ / b.rat_);
        return Scalar(a.tnum() * b.tden(), a.tden() * b.tnum());
    }

    Scalar inverse() const { return Scalar(1) / *this; }

    Scalar pow(long long e) const {
        if (e == 0) return Scalar(1);
        if (is_zero()) {
            if (e < 0) throw error(errc::division_by_zero, "0^negative");
            return Scalar(0);
        }
        if (!has_t_) return Scalar(rat_pow(rat_, e));
        Scalar base = e < 0 ? inverse() : *this;
        unsigned long long k = static_cast<unsigned long long>(e < 0 ? -e : e);
        Scalar acc(1);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // Total order used only for canonical sorting of results.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.has_t_ != b.has_t_) return a.has_t_ <=> b.has_t_;
        if (!a.has_t_) {
            if (a.rat_ < b.rat_) return std::strong_ordering::less;
            if (b.rat_ < a.rat_) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        auto cmp_poly = [](const TPoly& p, const TPoly& q) {
            if (p.c.size() != q.c.size())
                return p.c.size() < q.c.size() ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
            for (std::size_t i = 0; i < p.c.size(); ++i) {
                if (p.c[i] < q.c[i]) return std::strong_ordering::less;
                if (q.c[i] < p.c[i]) return std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        };
        auto c = cmp_poly(a.tnum_, b.tnum_);
        if (c != std::strong_ordering::equal) return c;
        return cmp_poly(a.tden_, b.tden_);
    }

private:
    Rational rat_;
    TPoly tnum_, tden_;
    bool has_t_ = false;
};

// Exact k-th root in the scalar field where decidable: rational scalars only.
inline std::optional<Scalar> scalar_exact_root(const Scalar& s, unsigned k) {
    if (!s.is_rational()) return std::nullopt;
    auto r = exact_root(s.rational(), k);
    if (!r) return std::nullopt;
    return Scalar(*r);
}

} // namespace pfield
