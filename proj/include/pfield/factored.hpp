#pragma once

// Flags kept in factored form: a scalar coefficient, Laurent monomial
// exponents on x and y, and affine linear-form factors with multiplicities.
// Positive powers of x and y are stored as factors; only negative powers go
// into the monomial exponents. No factorization is ever performed beyond
// rational-root extraction of univariate pieces (Q mode).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfield/io.hpp"
#include "pfield/unipoly_roots.hpp"

namespace pfield {

struct LinearForm {
    Scalar a, b, c; // a*x + b*y + c with (a,b) != (0,0)

    LinearForm(Scalar a_, Scalar b_, Scalar c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a.is_zero() && b.is_zero())
            throw error(errc::invalid_argument, "linear form needs a nonzero linear part");
    }
    static LinearForm X() { return LinearForm(Scalar(1), Scalar(0), Scalar(0)); }
    static LinearForm Y() { return LinearForm(Scalar(0), Scalar(1), Scalar(0)); }

    RatFunc2 to_ratfunc() const {
        BiPoly p;
        p.add_term({1, 0}, a);
        p.add_term({0, 1}, b);
        p.add_term({0, 0}, c);
        return RatFunc2(p);
    }
    BiPoly to_bipoly() const { return to_ratfunc().num; }

    // leading nonzero coefficient scaled to 1; returns the scale factor
    Scalar normalize() {
        Scalar lead = !a.is_zero() ? a : b;
        Scalar inv = lead.inverse();
        a = inv * a;
        b = inv * b;
        c = inv * c;
        return lead;
    }

    friend bool operator==(const LinearForm& f, const LinearForm& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }

    bool proportional_linear_part(const LinearForm& o) const {
        return (a * o.b - b * o.a).is_zero();
    }
    bool is_associate(const LinearForm& o) const {
        return proportional_linear_part(o) && (a * o.c - c * o.a).is_zero() &&
               (b * o.c - c * o.b).is_zero();
    }
};

struct FactoredFlag {
    Scalar coefficient{1};
    long long ex = 0, ey = 0; // Laurent exponents of x and y (negative parts)
    std::vector<std::pair<LinearForm, int>> factors;

    RatFunc2 expand() const {
        RatFunc2 r{Scalar(coefficient)};
        if (ex || ey) r = r * RatFunc2::laurent_monomial(Scalar(1), ex, ey);
        for (const auto& [l, m] : factors) r = r * l.to_ratfunc().pow(m);
        return r;
    }

    long long factor_degree() const {
        long long d = 0;
        for (const auto& [l, m] : factors) d += m;
        return d;
    }

    void canonicalize() {
        for (auto& [l, m] : factors) {
            Scalar s = l.normalize();
            for (int i = 0; i < m; ++i) coefficient = coefficient * s;
        }
        std::sort(factors.begin(), factors.end(), [](const auto& p, const auto& q) {
            const LinearForm &f = p.first, &g = q.first;
            if (f.a != g.a) return f.a < g.a;
            if (f.b != g.b) return f.b < g.b;
            return f.c < g.c;
        });
        std::vector<std::pair<LinearForm, int>> merged;
        for (auto& fm : factors) {
            if (!merged.empty() && merged.back().first == fm.first)
                merged.back().second += fm.second;
            else
                merged.push_back(fm);
        }
        factors = std::move(merged);
    }
};

namespace detail {

inline std::optional<LinearForm> as_linear_form(const BiPoly& p) {
    if (p.is_zero() || p.total_degree() > 1 || p.is_scalar()) return std::nullopt;
    return LinearForm(p.coeff(1, 0), p.coeff(0, 1), p.coeff(0, 0));
}

} // namespace detail

// Build a factored flag from an expression's syntactic product structure.
// Univariate non-linear factors are split by rational roots in Q mode;
// anything that cannot be expressed in linear forms and monomials throws.
inline FactoredFlag make_factored(const std::string& text, ScalarMode mode = ScalarMode::Q) {
    auto parts = detail::Parser(text, mode).parse_factor_list();
    FactoredFlag out;
    out.coefficient = parts.sign;

    auto push_base = [&](const RatFunc2& base, long long e) {
        if (base.is_zero()) throw error(errc::invalid_argument, "zero factor in flag");
        if (base.is_scalar()) {
            out.coefficient = out.coefficient * base.scalar_value().pow(e);
            return;
        }
        if (!base.is_polynomial())
            throw error(errc::unfactored_denominator,
                        "factored flags take polynomial factors; write denominators as negative powers");
        const BiPoly& p = base.num;
        if (p.is_monomial()) {
            auto [mexp, mc] = *p.terms.begin();
            out.coefficient = out.coefficient * mc.pow(e);
            long long xa = mexp.a * e, yb = mexp.b * e;
            auto add_axis = [&](long long k, const LinearForm& axis, long long& laurent) {
                if (k > 0)
                    out.factors.emplace_back(axis, static_cast<int>(k));
                else
                    laurent += k;
            };
            add_axis(xa, LinearForm::X(), out.ex);
            add_axis(yb, LinearForm::Y(), out.ey);
            return;
        }
        if (e < 0)
            throw error(errc::unfactored_denominator, "non-monomial factor with negative exponent");
        if (auto l = detail::as_linear_form(p)) {
            out.factors.emplace_back(*l, static_cast<int>(e));
            return;
        }
        // univariate factor: split by rational roots (Q mode only)
        bool in_x = !p.depends_on_y(), in_y = !p.depends_on_x();
        if (in_x || in_y) {
            XPoly u = in_x ? *bipoly_to_xpoly(p) : *bipoly_to_ypoly(p);
            auto split = split_by_rational_roots(u);
            if (!split)
                throw error(errc::roots_unavailable,
                            "factor does not split into linear forms over the scalar field: " +
                                print_bipoly(p));
            out.coefficient = out.coefficient * split->leading.pow(e);
            for (const auto& [root, mult] : split->roots) {
                LinearForm l = in_x ? LinearForm(Scalar(1), Scalar(0), -root)
                                    : LinearForm(Scalar(0), Scalar(1), -root);
                out.factors.emplace_back(l, static_cast<int>(mult * e));
            }
            return;
        }
        throw error(errc::invalid_argument,
                    "factor is neither a linear form, a monomial, nor univariate: " +
                        print_bipoly(p));
    };

    for (const auto& [base, e] : parts.parts) push_base(base, e);
    out.canonicalize();
    return out;
}

// separable detection: f = F(x) * G(y) * coefficient, for polynomial flags
struct SeparableProduct {
    XPoly fx; // polynomial in x
    XPoly gy; // polynomial in y
};

inline std::optional<SeparableProduct> separable_product(const BiPoly& p) {
    if (p.is_zero()) return std::nullopt;
    auto rows = bipoly_as_ypoly(p);
    XPoly fx;
    for (const auto& r : rows) fx = poly_gcd(fx, r);
    if (fx.is_zero()) return std::nullopt;
    std::vector<Scalar> g(rows.size(), Scalar(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto q = poly_divide_exact(rows[i], fx);
        if (!q) return std::nullopt;
        if (q->degree() > 0) return std::nullopt; // mixed term survives
        g[i] = q->coeff(0);
    }
    return SeparableProduct{fx, XPoly::from_coeffs(std::move(g))};
}

} // namespace pfield
