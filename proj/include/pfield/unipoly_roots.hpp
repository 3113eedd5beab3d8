#pragma once

// Rational-root extraction for univariate polynomials over the scalar
// field. Only decidable when every coefficient is a plain rational; in Q(t)
// mode callers must supply factored input instead.

#include <optional>
#include <utility>
#include <vector>

#include "pfield/poly1.hpp"
#include "pfield/scalar.hpp"

namespace pfield {

using XPoly = Poly1<Scalar>;

inline bool all_coeffs_rational(const XPoly& p) {
    for (const auto& c : p.c)
        if (!c.is_rational()) return false;
    return true;
}

// All rational roots with multiplicities. Throws RootsUnavailable when the
// polynomial has non-rational (t-dependent) coefficients.
inline std::vector<std::pair<Scalar, int>> rational_roots(const XPoly& poly) {
    if (poly.is_zero()) throw error(errc::invalid_argument, "roots of the zero polynomial");
    if (!all_coeffs_rational(poly))
        throw error(errc::roots_unavailable,
                    "rational-root extraction needs t-free coefficients; supply factored input");
    std::vector<std::pair<Scalar, int>> out;
    XPoly p = poly;
    // strip the root at 0
    std::size_t v = 0;
    while (v < p.c.size() && p.c[v].is_zero()) ++v;
    if (v > 0) {
        out.emplace_back(Scalar(0), static_cast<int>(v));
        p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(v));
    }
    if (p.degree() < 1) return out;

    // clear denominators to an integer polynomial
    Integer lcm = 1;
    for (const auto& c : p.c) {
        Integer d = rat_den(c.rational());
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    std::vector<Integer> ic(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i)
        ic[i] = rat_num(p.c[i].rational()) * (lcm / rat_den(p.c[i].rational()));

    auto nums = detail::positive_divisors(ic.front());
    auto dens = detail::positive_divisors(ic.back());
    XPoly rest = p;
    for (const Integer& pn : nums) {
        for (const Integer& qd : dens) {
            for (int sign : {1, -1}) {
                Rational cand(sign * pn, qd);
                Scalar r{cand};
                int mult = 0;
                while (rest.degree() >= 1 && rest.eval(r).is_zero()) {
                    XPoly lin = XPoly::from_coeffs({-r, Scalar(1)});
                    rest = *poly_divide_exact(rest, lin);
                    ++mult;
                }
                if (mult) out.emplace_back(r, mult);
                if (rest.degree() < 1) return out;
            }
        }
    }
    return out;
}

struct SplitResult {
    Scalar leading;
    std::vector<std::pair<Scalar, int>> roots; // p = leading * prod (v - root)^mult
};

// Full splitting into linear factors over the scalar field, if possible.
inline std::optional<SplitResult> split_by_rational_roots(const XPoly& p) {
    if (p.is_zero() || p.degree() < 1) return std::nullopt;
    if (!all_coeffs_rational(p)) return std::nullopt;
    auto roots = rational_roots(p);
    long long total = 0;
    for (const auto& [r, m] : roots) total += m;
    if (total != p.degree()) return std::nullopt;
    return SplitResult{p.lc(), std::move(roots)};
}

} // namespace pfield
