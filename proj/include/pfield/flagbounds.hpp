#pragma once

// Denominator bounds over fractional frames, for the certified shapes, and
// construction of flags xy*f(h) that cannot be presented by small
// denominators — in particular flags with no polynomial presentation at all.

#include <optional>
#include <utility>
#include <vector>

#include "pfield/factored.hpp"
#include "pfield/poisson.hpp"
#include "pfield/unipoly_roots.hpp"

namespace pfield {

// h = prod_i (u - a_i) / prod_j (u - b_j), all shifts distinct, b_0 first.
struct BoundedElement {
    RatFunc2 u;
    std::vector<Scalar> a_roots; // numerator shifts, size w'
    std::vector<Scalar> b_roots; // denominator shifts, size w+1 >= 1

    BoundedElement(RatFunc2 u_, std::vector<Scalar> a, std::vector<Scalar> b)
        : u(std::move(u_)), a_roots(std::move(a)), b_roots(std::move(b)) {
        if (b_roots.empty()) throw error(errc::invalid_argument, "need at least one denominator shift");
        std::vector<Scalar> all = a_roots;
        all.insert(all.end(), b_roots.begin(), b_roots.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i] == all[j])
                    throw error(errc::not_distinct_forms, "shifts must be pairwise distinct");
    }

    long long w() const { return static_cast<long long>(b_roots.size()) - 1; }
    long long w_prime() const { return static_cast<long long>(a_roots.size()); }

    RatFunc2 expand() const {
        RatFunc2 num(1), den(1);
        for (const auto& a : a_roots) num = num * (u - RatFunc2(a));
        for (const auto& b : b_roots) den = den * (u - RatFunc2(b));
        if (den.is_zero()) throw error(errc::indeterminate_result, "denominator vanishes");
        return num / den;
    }
};

struct DenominatorBounds {
    long long dpb_lower = 0;            // always valid
    std::optional<long long> ddb_exact; // certified shapes only
    std::optional<long long> dpb_exact;
    std::optional<long long> fdb_exact;
    std::optional<long long> frame_den_degree; // denominator degree of h in the frame (1/x, y)
};

// Exact values are certified only when u = x + b_0 and w+1 >= w'; everything
// else receives the shape lower bound dpb >= w, which survives arbitrary
// field endomorphisms.
inline DenominatorBounds bounds_certified(const BoundedElement& h) {
    DenominatorBounds out;
    out.dpb_lower = h.w();
    RatFunc2 shifted_x = RatFunc2::x() + RatFunc2(h.b_roots.front());
    if (h.u == shifted_x && h.w() + 1 >= h.w_prime()) {
        out.ddb_exact = h.w();
        out.dpb_exact = h.w();
        out.fdb_exact = 1;
        // witness frame (x^{-1}, y): rewrite h with x -> 1/x and check the
        // resulting denominator degree
        RatFunc2 in_frame = substitute(h.expand(), RatFunc2::x().inverse(), RatFunc2::y());
        out.frame_den_degree = in_frame.den.total_degree();
    }
    return out;
}

struct InfiniteFlagCertificate {
    BoundedElement h;
    XPoly f_poly;          // polynomial in a formal parameter, degree >= 2
    RatFunc2 flag;         // xy * f_poly(h), expanded exactly
    long long w_threshold; // no morphism into K{g} when g's denominator has
                           // fewer than this many non-associate prime divisors
    long long gamma_cap_degree; // h lies in the degree-d invariant subalgebra
                                // for every 0 <= d < deg f_poly
};

inline RatFunc2 eval_xpoly_at(const XPoly& p, const RatFunc2& v) {
    RatFunc2 acc;
    for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * v + RatFunc2(p.c[i]);
    return acc;
}

inline InfiniteFlagCertificate build_infinite_flag(const BoundedElement& h, const XPoly& f_poly) {
    if (f_poly.degree() < 2)
        throw error(errc::degree_too_small, "need deg f >= 2");
    if (h.w() < 1)
        throw error(errc::degree_too_small, "need at least two denominator shifts (w >= 1)");
    RatFunc2 hval = h.expand();
    if (hval.is_scalar()) throw error(errc::constant_h, "h must be nonconstant");
    RatFunc2 flag = RatFunc2::x() * RatFunc2::y() * eval_xpoly_at(f_poly, hval);
    if (flag.is_zero()) throw error(errc::invalid_argument, "flag vanished");
    return InfiniteFlagCertificate{h, f_poly, flag, h.w(), f_poly.degree() - 1};
}

// Number of non-associate prime divisors of the denominator of a flag given
// in factored form; 0 for polynomial flags.
inline long long dpb_upper_for_flag(const FactoredFlag& g) {
    long long count = 0;
    if (g.ex < 0) ++count;
    if (g.ey < 0) ++count;
    for (const auto& [l, m] : g.factors)
        if (m < 0) ++count;
    return count;
}

// Same, for an expression flag: the denominator must be scalar, monomial, or
// split into distinct linear factors by rational-root extraction (Q mode).
inline long long dpb_upper_for_flag(const RatFunc2& g) {
    const BiPoly& den = g.den;
    if (den.is_scalar()) return 0;
    long long count = 0;
    BiPoly rest = den;
    auto strip_axis = [&](bool xaxis) {
        long long k = xaxis ? rest.leading_exp().a : 0;
        // minimal exponent of the axis variable across terms
        long long mn = -1;
        for (const auto& [e, c] : rest.terms) {
            long long v = xaxis ? e.a : e.b;
            mn = mn < 0 ? v : std::min(mn, v);
        }
        (void)k;
        if (mn > 0) {
            rest = rest.divided_by_monomial(xaxis ? mn : 0, xaxis ? 0 : mn);
            ++count;
        }
    };
    strip_axis(true);
    strip_axis(false);
    if (rest.is_scalar()) return count;
    bool in_x = !rest.depends_on_y(), in_y = !rest.depends_on_x();
    if (!in_x && !in_y)
        throw error(errc::unfactored_denominator,
                    "denominator is not factored and is not univariate");
    XPoly u = in_x ? *bipoly_to_xpoly(rest) : *bipoly_to_ypoly(rest);
    auto split = split_by_rational_roots(u);
    if (!split)
        throw error(errc::unfactored_denominator,
                    "denominator does not split over the scalar field");
    return count + static_cast<long long>(split->roots.size());
}

} // namespace pfield
