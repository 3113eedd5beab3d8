#pragma once

// Logarithmic-derivative calculus for univariate rational functions over
// the scalar field: residue lists of s'/s for factored s, the solvability
// criterion for 1/f = s'/s with split f, and the necessary trace conditions
// on the candidate exponents.

#include <optional>
#include <utility>
#include <vector>

#include "pfield/bipoly.hpp"
#include "pfield/poly1.hpp"
#include "pfield/scalar.hpp"

namespace pfield {

using XPoly = Poly1<Scalar>;

struct RatUni { // rational function in one variable over the scalar field
    XPoly num, den;

    RatUni() : num(), den(Scalar(1)) {}
    explicit RatUni(XPoly n) : num(std::move(n)), den(Scalar(1)) {}
    RatUni(XPoly n, XPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    void reduce() {
        if (den.is_zero()) throw error(errc::division_by_zero, "zero denominator");
        if (num.is_zero()) {
            den = XPoly(Scalar(1));
            return;
        }
        XPoly g = detail::xpoly_gcd(num, den);
        if (!g.is_constant()) {
            num = *poly_divide_exact(num, g);
            den = *poly_divide_exact(den, g);
        }
        Scalar lead = den.lc();
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            num = inv * num;
            den = inv * den;
        }
    }
    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const RatUni& a, const RatUni& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend RatUni operator+(const RatUni& a, const RatUni& b) {
        return RatUni(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatUni operator-(const RatUni& a, const RatUni& b) {
        return RatUni(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatUni operator*(const RatUni& a, const RatUni& b) {
        return RatUni(a.num * b.num, a.den * b.den);
    }
    friend RatUni operator/(const RatUni& a, const RatUni& b) {
        if (b.is_zero()) throw error(errc::division_by_zero, "division by zero");
        return RatUni(a.num * b.den, a.den * b.num);
    }
    RatUni derivative() const {
        return RatUni(num.derivative() * den - num * den.derivative(), den * den);
    }
};

// s = scale * prod_i (v - root_i)^{z_i}, roots pairwise distinct, z_i != 0
struct PowerProduct {
    Scalar scale{1};
    std::vector<std::pair<Scalar, long long>> factors;

    PowerProduct() = default;
    PowerProduct(Scalar sc, std::vector<std::pair<Scalar, long long>> f)
        : scale(std::move(sc)), factors(std::move(f)) {
        if (scale.is_zero()) throw error(errc::invalid_argument, "zero scale");
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].second == 0)
                throw error(errc::invalid_argument, "zero exponent in power product");
            for (std::size_t j = i + 1; j < factors.size(); ++j)
                if (factors[i].first == factors[j].first)
                    throw error(errc::not_distinct_forms, "repeated root in power product");
        }
    }

    RatUni expand() const {
        RatUni r{XPoly(scale)};
        for (const auto& [a, z] : factors) {
            XPoly lin = XPoly::from_coeffs({-a, Scalar(1)});
            XPoly p = lin.pow(static_cast<unsigned>(z < 0 ? -z : z));
            r = z > 0 ? r * RatUni(p) : r / RatUni(p);
        }
        return r;
    }

    RatUni log_derivative() const { // s'/s = sum z_i / (v - a_i)
        RatUni sum;
        for (const auto& [a, z] : factors) {
            XPoly lin = XPoly::from_coeffs({-a, Scalar(1)});
            sum = sum + RatUni(XPoly(Scalar(z)), lin);
        }
        return sum;
    }
};

// f = gamma * prod_i (v - root_i), roots distinct
struct SplitPoly {
    Scalar gamma{1};
    std::vector<Scalar> roots;

    SplitPoly(Scalar g, std::vector<Scalar> r) : gamma(std::move(g)), roots(std::move(r)) {
        if (gamma.is_zero()) throw error(errc::invalid_argument, "zero leading coefficient");
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (roots[i] == roots[j])
                    throw error(errc::not_distinct_forms, "repeated root in split polynomial");
    }

    XPoly expand() const {
        XPoly p(gamma);
        for (const auto& a : roots) p = p * XPoly::from_coeffs({-a, Scalar(1)});
        return p;
    }
};

// residues of s'/s: the (root, exponent) pairs of s itself
inline std::vector<std::pair<Scalar, long long>> logderiv_residues(const PowerProduct& s) {
    return s.factors;
}

namespace detail {

// z_i = 1 / (gamma * prod_{j != i} (a_i - a_j))
inline std::vector<Scalar> partial_fraction_weights(const SplitPoly& f) {
    std::vector<Scalar> z;
    z.reserve(f.roots.size());
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
        Scalar prod = f.gamma;
        for (std::size_t j = 0; j < f.roots.size(); ++j)
            if (j != i) prod = prod * (f.roots[i] - f.roots[j]);
        z.push_back(prod.inverse());
    }
    return z;
}

} // namespace detail

// Solve 1/f = s'/s for s a power product over the roots of f. Succeeds
// exactly when every candidate exponent is an integer.
inline std::optional<PowerProduct> solve_inverse_logderiv(const SplitPoly& f) {
    if (f.roots.empty())
        throw error(errc::empty_product,
                    "constant f: 1/f is never a logarithmic derivative of this shape");
    auto z = detail::partial_fraction_weights(f);
    std::vector<std::pair<Scalar, long long>> factors;
    factors.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!z[i].is_integer_value()) return std::nullopt;
        Rational r = z[i].rational();
        factors.emplace_back(f.roots[i], static_cast<long long>(rat_num(r)));
    }
    PowerProduct s(Scalar(1), std::move(factors));
    // the defining identity must close exactly
    RatUni check = s.log_derivative() * RatUni(f.expand());
    if (!(check == RatUni(XPoly(Scalar(1)))))
        throw error(errc::identity_fails, "internal: s'/s * f != 1");
    return s;
}

struct NecessaryConditions {
    bool sum_zero = false;
    bool moment_zero = false;
    std::vector<Scalar> zs;
};

// trace conditions on the candidate exponents; both hold whenever
// solve_inverse_logderiv succeeds (and in fact whenever n >= 3)
inline NecessaryConditions necessary_conditions(const SplitPoly& f) {
    if (f.roots.size() < 3)
        throw error(errc::too_few_roots, "need at least three roots");
    NecessaryConditions out;
    out.zs = detail::partial_fraction_weights(f);
    Scalar sum(0), moment(0);
    for (std::size_t i = 0; i < out.zs.size(); ++i) {
        sum = sum + out.zs[i];
        moment = moment + out.zs[i] * f.roots[i];
    }
    out.sum_zero = sum.is_zero();
    out.moment_zero = moment.is_zero();
    return out;
}

} // namespace pfield
