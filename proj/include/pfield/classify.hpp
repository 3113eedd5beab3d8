#pragma once

// Constructive classification of flags into the canonical targets
//   Weyl   : {x,y} = 1
//   Kq     : {x,y} = q x y
//   K1n0   : {x,y} = q x^{n+1} y, n >= 2
// by explicit changes of variables. Every reduction is a Step: new
// generators (u,v) given as expressions in the current ones, together with
// the inverse expressions. The flag after a step is recomputed mechanically
// as (u_s v_t - u_t v_s) * flag, rewritten in the new generators, so the
// chain is self-checking; the top-level result is verified once more by
// re-bracketing through the composed change of variables.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pfield/poisson.hpp"
#include "pfield/unipoly_roots.hpp"

namespace pfield {

struct ChangeOfVars {
    RatFunc2 fwd_u, fwd_v; // new generators as functions of (x, y)
    RatFunc2 inv_x, inv_y; // x and y as functions of the new generators
};

struct CanonicalType {
    enum class Kind { Weyl, Kq, K1n0, UnresolvedOverField, OutsideScope };
    Kind kind = Kind::OutsideScope;
    Scalar q{1};      // Kq and K1n0
    long long n = 0;  // K1n0
    std::string reason;

    static CanonicalType weyl() { return {Kind::Weyl, Scalar(1), 0, ""}; }
    static CanonicalType kq(Scalar q) { return {Kind::Kq, std::move(q), 0, ""}; }
    static CanonicalType k1n0(long long n, Scalar q) { return {Kind::K1n0, std::move(q), n, ""}; }
    static CanonicalType unresolved(std::string why) {
        return {Kind::UnresolvedOverField, Scalar(1), 0, std::move(why)};
    }
    static CanonicalType outside(std::string why) {
        return {Kind::OutsideScope, Scalar(1), 0, std::move(why)};
    }
    bool resolved() const {
        return kind == Kind::Weyl || kind == Kind::Kq || kind == Kind::K1n0;
    }
};

inline RatFunc2 canonical_flag(const CanonicalType& t) {
    switch (t.kind) {
    case CanonicalType::Kind::Weyl: return RatFunc2(1);
    case CanonicalType::Kind::Kq: return RatFunc2(BiPoly::monomial(t.q, 1, 1));
    case CanonicalType::Kind::K1n0: return RatFunc2(BiPoly::monomial(t.q, t.n + 1, 1));
    default: throw error(errc::unresolved_input, "no canonical flag for unresolved type");
    }
}

inline std::string to_string(const CanonicalType& t);

struct ClassifyResult {
    CanonicalType type;
    std::optional<ChangeOfVars> cov;
    bool verified = false;
};

namespace detail {

struct Step {
    RatFunc2 u, v;   // new generators in terms of the current pair
    RatFunc2 sx, sy; // current pair in terms of the new generators
};

inline RatFunc2 apply_step(const RatFunc2& flag, const Step& st) {
    return substitute(weyl_bracket(st.u, st.v) * flag, st.sx, st.sy);
}

struct RecOut {
    CanonicalType type;
    std::vector<Step> steps;
};

inline RecOut classify_rec(const RatFunc2& f, int depth, bool allow_swap = true);

inline RecOut with_step(const Step& st, const RatFunc2& f, int depth, bool allow_swap = true) {
    RecOut inner = classify_rec(apply_step(f, st), depth + 1, allow_swap);
    if (inner.type.resolved()) inner.steps.insert(inner.steps.begin(), st);
    return inner;
}

inline RecOut classify_monomial(const Scalar& q, long long a, long long b, const RatFunc2& f,
                                int depth);

// x f1(y): dispatch on the shape of f1
inline RecOut classify_x_times(const RatFunc2& phi, const RatFunc2& f, int depth) {
    RatFunc2 X = RatFunc2::x(), Y = RatFunc2::y();
    // phi is a function of y only
    if (f.num.is_monomial() && f.den.is_monomial()) {
        auto [ne, nc] = *f.num.terms.begin();
        auto [de, dc] = *f.den.terms.begin();
        return classify_monomial(nc / dc, ne.a - de.a, ne.b - de.b, f, depth);
    }
    if (!phi.is_polynomial()) return {CanonicalType::outside("x*f(y) with non-polynomial f"), {}};
    XPoly p = *bipoly_to_ypoly(phi.num);
    if (p.degree() == 1) {
        // {x, q y + r} = q * (x * phi) = q u v
        Scalar q = p.c[1], r = p.coeff(0);
        Step st{X, q * Y + RatFunc2(r), X, (Y - RatFunc2(r)) / RatFunc2(q)};
        RecOut out = {CanonicalType::kq(q), {st}};
        return out;
    }
    if (p.degree() == 2) {
        Scalar al = p.c[2], be = p.coeff(1), ga = p.coeff(0);
        Scalar shift = be / (Scalar(2) * al);
        Step s1{X, Y + RatFunc2(shift), X, Y - RatFunc2(shift)};
        Scalar gp = ga - be * be / (Scalar(4) * al); // constant term after the shift
        if (gp.is_zero()) {
            // flag x * al * y^2: pass to the monomial machinery
            return with_step(s1, f, depth);
        }
        Scalar disc = be * be - Scalar(4) * al * ga;
        auto root = scalar_exact_root(disc, 2);
        if (!root)
            return {CanonicalType::unresolved("needs a square root of " + print_scalar(disc)), {}};
        Scalar q = *root; // q^2 = -4 al gp
        if (q.is_zero()) return {CanonicalType::outside("degenerate discriminant"), {}};
        Scalar zeta = q / Scalar(2);
        RatFunc2 f1 = apply_step(f, s1); // u (al v^2 + gp)
        Step s2{Scalar(gp) * X, X * Y, X / RatFunc2(gp), Scalar(gp) * Y / X};
        RatFunc2 f2 = apply_step(f1, s2); // u^2 + (al gp) v^2
        Step s3{X - Scalar(zeta) * Y, X + Scalar(zeta) * Y,
                (X + Y) / RatFunc2(2), (Y - X) / (Scalar(2) * RatFunc2(zeta))};
        RatFunc2 f3 = apply_step(f2, s3); // q u v
        if (f3 != RatFunc2(BiPoly::monomial(q, 1, 1)))
            throw error(errc::invalid_argument, "internal: quadratic reduction drifted");
        return {CanonicalType::kq(q), {s1, s2, s3}};
    }
    return {CanonicalType::outside("x*f(y) with deg f >= 3 and f not a monomial"), {}};
}

// q x^a y^b with integer exponents
inline RecOut classify_monomial(const Scalar& q, long long a, long long b, const RatFunc2& f,
                                int depth) {
    RatFunc2 X = RatFunc2::x(), Y = RatFunc2::y();
    long long k1 = a - 1, k2 = b - 1;
    if (k1 == 0 && k2 == 0) return {CanonicalType::kq(q), {}};
    long long k0 = std::gcd(k1 < 0 ? -k1 : k1, k2 < 0 ? -k2 : k2);
    long long p1 = k1 / k0, p2 = k2 / k0;
    // complete (p1, p2) to a determinant-one integer matrix (p1 p2; c1 c2)
    long long c1 = 0, c2 = 0;
    {
        long long old_r = p1, r = p2, old_s = 1, s = 0, old_t = 0, tt = 1;
        while (r != 0) {
            long long qq = old_r / r;
            std::swap(old_r -= qq * r, r);
            std::swap(old_s -= qq * s, s);
            std::swap(old_t -= qq * tt, tt);
        }
        // old_s*p1 + old_t*p2 = old_r = ±1
        if (old_r == 1) {
            c2 = old_s;
            c1 = -old_t;
        } else {
            c2 = -old_s;
            c1 = old_t;
        }
    }
    std::vector<Step> steps;
    RatFunc2 cur = f;
    if (!(p1 == 1 && p2 == 0 && c1 == 0 && c2 == 1)) {
        Step mono{RatFunc2::laurent_monomial(Scalar(1), p1, p2),
                  RatFunc2::laurent_monomial(Scalar(1), c1, c2),
                  RatFunc2::laurent_monomial(Scalar(1), c2, -p2),
                  RatFunc2::laurent_monomial(Scalar(1), -c1, p1)};
        cur = apply_step(cur, mono);
        steps.push_back(mono);
    }
    if (cur != RatFunc2(BiPoly::monomial(q, 1 + k0, 1))) {
        // the lattice map can only land on q u^{1+k0} v
        throw error(errc::invalid_argument, "internal: monomial normalization drifted");
    }
    if (k0 == 1) {
        RecOut inner = classify_rec(cur, depth + 1); // q x^2 y resolves to Weyl
        inner.steps.insert(inner.steps.begin(), steps.begin(), steps.end());
        return inner;
    }
    // normalize q to 1 when a k0-th root exists in the scalar field
    if (q == Scalar(1)) return {CanonicalType::k1n0(k0, q), steps};
    if (auto alpha = scalar_exact_root(q, static_cast<unsigned>(k0))) {
        Step scale{Scalar(*alpha) * X, Y, X / RatFunc2(*alpha), Y};
        cur = apply_step(cur, scale);
        steps.push_back(scale);
        if (cur != RatFunc2(BiPoly::monomial(Scalar(1), 1 + k0, 1)))
            throw error(errc::invalid_argument, "internal: scale normalization drifted");
        return {CanonicalType::k1n0(k0, Scalar(1)), steps};
    }
    return {CanonicalType::k1n0(k0, q), steps};
}

inline RecOut classify_rec(const RatFunc2& f, int depth, bool allow_swap) {
    if (depth > 16) return {CanonicalType::outside("reduction depth exceeded"), {}};
    RatFunc2 X = RatFunc2::x(), Y = RatFunc2::y();

    // flag depending on one variable only
    if (!f.depends_on_y()) {
        Step st{X, Y / f, X, Y * f};
        return {CanonicalType::weyl(), {st}};
    }
    if (!f.depends_on_x()) {
        Step st{X / f, Y, X * substitute(f, X, Y), Y};
        return {CanonicalType::weyl(), {st}};
    }

    // x-degree at most 2 with an x-free denominator
    if (!f.den.depends_on_x() && f.num.deg_x() <= 2) {
        RatFunc2 den(f.den);
        BiPoly n0b, n1b, n2b;
        for (const auto& [e, c] : f.num.terms) {
            BiPoly& target = e.a == 0 ? n0b : (e.a == 1 ? n1b : n2b);
            target.add_term({0, e.b}, c);
        }
        RatFunc2 f0 = RatFunc2(n0b) / den, f1 = RatFunc2(n1b) / den, f2 = RatFunc2(n2b) / den;
        if (f.num.deg_x() == 1) {
            if (!f0.is_zero()) {
                // u := x f1 + f0 kills the x-free part
                Step st{X * f1 + f0, Y, (X - substitute(f0, X, Y)) / substitute(f1, X, Y), Y};
                RatFunc2 nf = apply_step(f, st);
                // nf = u * f1(v)
                RecOut inner = classify_x_times(nf / X, nf, depth);
                if (inner.type.resolved()) inner.steps.insert(inner.steps.begin(), st);
                return inner;
            }
            RecOut pure = classify_x_times(f / X, f, depth);
            if (pure.type.kind != CanonicalType::Kind::OutsideScope || !pure.steps.empty())
                return pure;
            // fall through when the linear pattern has no rule
        } else if (f.num.deg_x() == 2) {
            Step st{X * f2 + f1 / RatFunc2(2), Y,
                    (X - substitute(f1, X, Y) / RatFunc2(2)) / substitute(f2, X, Y), Y};
            RatFunc2 nf = apply_step(f, st); // u^2 + h''(v)
            RatFunc2 h2 = nf - RatFunc2(BiPoly::monomial(Scalar(1), 2, 0));
            if (!h2.depends_on_x()) {
                if (!h2.depends_on_y()) {
                    // u^2 + const is a function of u alone
                    return with_step(st, f, depth);
                }
                if (h2.is_polynomial() && h2.num.deg_y() == 1) {
                    Scalar be = h2.num.coeff(0, 1), ga = h2.num.coeff(0, 0);
                    Step lin{X, nf, X, (Y - X * X - RatFunc2(ga)) / RatFunc2(be)};
                    RecOut inner = classify_rec(apply_step(nf, lin), depth + 1);
                    if (inner.type.resolved()) {
                        inner.steps.insert(inner.steps.begin(), lin);
                        inner.steps.insert(inner.steps.begin(), st);
                    }
                    return inner;
                }
                if (h2.is_polynomial() && h2.num.deg_y() == 2) {
                    Scalar al = h2.num.coeff(0, 2), be = h2.num.coeff(0, 1),
                           ga = h2.num.coeff(0, 0);
                    Scalar shift = be / (Scalar(2) * al);
                    Step s1{X, Y + RatFunc2(shift), X, Y - RatFunc2(shift)};
                    RatFunc2 g1 = apply_step(nf, s1); // u^2 + al v^2 + gp
                    Scalar gp = ga - be * be / (Scalar(4) * al);
                    auto zr = scalar_exact_root(-al, 2);
                    if (!zr)
                        return {CanonicalType::unresolved(
                                    "needs a square root of " + print_scalar(-al)),
                                {}};
                    Scalar zeta = *zr, q = Scalar(2) * zeta;
                    Step s2{X - Scalar(zeta) * Y, X + Scalar(zeta) * Y, (X + Y) / RatFunc2(2),
                            (Y - X) / (Scalar(2) * RatFunc2(zeta))};
                    RatFunc2 g2 = apply_step(g1, s2); // q u v + q gp
                    std::vector<Step> steps{st, s1, s2};
                    if (!gp.is_zero()) {
                        Step s3{X + RatFunc2(gp) / Y, Y, X - RatFunc2(gp) / Y, Y};
                        g2 = apply_step(g2, s3);
                        steps.push_back(s3);
                    }
                    if (g2 != RatFunc2(BiPoly::monomial(q, 1, 1)))
                        throw error(errc::invalid_argument, "internal: x^2 reduction drifted");
                    return {CanonicalType::kq(q), steps};
                }
            }
            // no rule for this h''; fall through
        }
    }

    // Laurent monomial flags: family (1)
    if (f.num.is_monomial() && f.den.is_monomial()) {
        auto [ne, nc] = *f.num.terms.begin();
        auto [de, dc] = *f.den.terms.begin();
        return classify_monomial(nc / dc, ne.a - de.a, ne.b - de.b, f, depth);
    }

    // mirrored linear/quadratic patterns in y
    if (allow_swap && !f.den.depends_on_y() && f.num.deg_y() <= 2 &&
        (f.den.depends_on_x() || f.num.deg_x() > 2)) {
        // swap generators: (u,v) = (y,x) turns the flag into -f(v,u)
        Step sw{Y, X, Y, X};
        return with_step(sw, f, depth, false);
    }

    // homogeneous polynomial flags
    if (f.is_polynomial() && f.num.is_homogeneous() && f.num.total_degree() >= 1) {
        const BiPoly& N = f.num;
        BiPoly sq = gcd_bi(N, gcd_bi(N.derivative_x(), N.derivative_y()));
        BiPoly S = *divide_exact(N, sq); // squarefree part, distinct directions
        long long ds = S.total_degree(), d = N.total_degree();
        auto step_from_forms = [&](const LinearForm& l1, const LinearForm& l2) {
            Scalar det = l1.a * l2.b - l1.b * l2.a;
            Scalar di = det.inverse();
            // inverse of (a1 b1; a2 b2)
            RatFunc2 ix = di * (Scalar(l2.b) * X - Scalar(l1.b) * Y);
            RatFunc2 iy = di * (Scalar(-l2.a) * X + Scalar(l1.a) * Y);
            return Step{l1.to_ratfunc(), l2.to_ratfunc(), ix, iy};
        };
        if (ds == 1) {
            LinearForm l(S.coeff(1, 0), S.coeff(0, 1), Scalar(0));
            LinearForm m = l.a.is_zero() ? LinearForm(-(l.b.inverse()), Scalar(0), Scalar(0))
                                         : LinearForm(Scalar(0), l.a.inverse(), Scalar(0));
            // det(l, m) = 1; flag becomes a * u^d
            return with_step(step_from_forms(l, m), f, depth);
        }
        if (ds == 2) {
            std::optional<LinearForm> l1, l2;
            Scalar A = S.coeff(2, 0), B = S.coeff(1, 1), C = S.coeff(0, 2);
            if (A.is_zero() && C.is_zero()) { // B x y
                l1 = LinearForm::X();
                l2 = LinearForm::Y();
            } else if (C.is_zero()) { // y divides
                l1 = LinearForm(A, B, Scalar(0));
                l2 = LinearForm::Y();
            } else if (A.is_zero()) {
                l1 = LinearForm::X();
                l2 = LinearForm(B, C, Scalar(0));
            } else {
                Scalar disc = B * B - Scalar(4) * A * C;
                auto rt = scalar_exact_root(disc, 2);
                if (!rt)
                    return {CanonicalType::unresolved("homogeneous quadratic part needs sqrt(" +
                                                      print_scalar(disc) + ")"),
                            {}};
                Scalar s1 = (-B + *rt) / (Scalar(2) * A), s2 = (-B - *rt) / (Scalar(2) * A);
                l1 = LinearForm(Scalar(1), -s1, Scalar(0));
                l2 = LinearForm(Scalar(1), -s2, Scalar(0));
            }
            return with_step(step_from_forms(*l1, *l2), f, depth);
        }
        if (ds == 3 && d == 3) {
            std::vector<LinearForm> forms;
            BiPoly rest = N;
            // y-axis factor, then directions x - r y from the dehomogenized roots
            if (rest.coeff(3, 0).is_zero()) forms.push_back(LinearForm::Y());
            std::vector<Scalar> co(4, Scalar(0));
            for (const auto& [e, c] : N.terms) co[static_cast<std::size_t>(e.a)] = c;
            XPoly P = XPoly::from_coeffs(co);
            auto split = split_by_rational_roots(P);
            if (!split || forms.size() + split->roots.size() != 3)
                return {CanonicalType::unresolved("cubic flag does not split over the scalars"),
                        {}};
            for (const auto& [r, m] : split->roots)
                forms.push_back(LinearForm(Scalar(1), -r, Scalar(0)));
            // map the first two factors to the axes, then invert both
            Step s1 = step_from_forms(forms[0], forms[1]);
            RatFunc2 g1 = apply_step(f, s1); // c u v (al u + be v)
            Scalar al = g1.num.coeff(2, 1), be = g1.num.coeff(1, 2);
            Step s2{Scalar(al) * X, Scalar(be) * Y, X / RatFunc2(al), Y / RatFunc2(be)};
            RatFunc2 g2 = apply_step(g1, s2); // c' u v (u + v)
            Step s3{X.inverse(), Y.inverse(), X.inverse(), Y.inverse()};
            RatFunc2 g3 = apply_step(g2, s3); // c' (u + v)
            RecOut inner = classify_rec(g3, depth + 1);
            if (inner.type.resolved()) {
                inner.steps.insert(inner.steps.begin(), s3);
                inner.steps.insert(inner.steps.begin(), s2);
                inner.steps.insert(inner.steps.begin(), s1);
            }
            return inner;
        }
        if (d >= 4 && ds >= 3)
            return {CanonicalType::outside("homogeneous flag of degree >= 4 with >= 3 "
                                           "distinct directions"),
                    {}};
    }

    // separable polynomial products with a quadratic side
    if (f.is_polynomial()) {
        if (auto sep = separable_product(f.num)) {
            const XPoly &F = sep->fx, &G = sep->gy;
            auto reduce_quadratic_side = [&](const XPoly& g) -> std::optional<RecOut> {
                // flag = F(x) * g(y) with deg g = 2
                Scalar g2 = g.c[2], g1 = g.coeff(1), g0 = g.coeff(0);
                Scalar disc = g1 * g1 - Scalar(4) * g2 * g0;
                if (disc.is_zero()) {
                    Scalar a = g1 / (Scalar(2) * g2); // g = g2 (y + a)^2
                    Step st{X, (Y + RatFunc2(a)).inverse(), X, Y.inverse() - RatFunc2(a)};
                    return with_step(st, f, depth); // flag becomes -g2 F(u)
                }
                auto rt = scalar_exact_root(disc, 2);
                if (!rt)
                    return RecOut{CanonicalType::unresolved(
                                      "quadratic factor needs sqrt(" + print_scalar(disc) + ")"),
                                  {}};
                Scalar a = (g1 - *rt) / (Scalar(2) * g2), b = (g1 + *rt) / (Scalar(2) * g2);
                // g = g2 (y + a)(y + b), a != b
                Step s1{X, (Y + RatFunc2(a)).inverse(), X, Y.inverse() - RatFunc2(a)};
                RatFunc2 h1 = apply_step(f, s1); // -g2 F(u) v (1 + (b-a) v) / v = ... rational
                Step s2{X, RatFunc2(1) + Scalar(b - a) * Y, X,
                        (Y - RatFunc2(1)) / RatFunc2(b - a)};
                RatFunc2 h2 = apply_step(h1, s2); // const * F(u) * v
                RecOut inner = classify_rec(h2, depth + 1);
                if (inner.type.resolved()) {
                    inner.steps.insert(inner.steps.begin(), s2);
                    inner.steps.insert(inner.steps.begin(), s1);
                }
                return inner;
            };
            if (G.degree() == 2) {
                if (auto r = reduce_quadratic_side(G)) return *r;
            } else if (allow_swap && F.degree() == 2) {
                Step sw{Y, X, Y, X};
                return with_step(sw, f, depth, false);
            }
        }
    }

    return {CanonicalType::outside("no reduction rule applies"), {}};
}

} // namespace detail

inline ClassifyResult classify_flag(const PoissonField& K) {
    detail::RecOut rec = detail::classify_rec(K.flag, 0);
    ClassifyResult out;
    out.type = rec.type;
    if (!rec.type.resolved()) return out;

    RatFunc2 X = RatFunc2::x(), Y = RatFunc2::y();
    RatFunc2 U = X, V = Y, IX = X, IY = Y;
    for (const auto& st : rec.steps) {
        RatFunc2 nu = substitute(st.u, U, V), nv = substitute(st.v, U, V);
        IX = substitute(IX, st.sx, st.sy);
        IY = substitute(IY, st.sx, st.sy);
        U = nu;
        V = nv;
    }
    ChangeOfVars cov{U, V, IX, IY};
    bool ok = substitute(U, IX, IY) == X && substitute(V, IX, IY) == Y &&
              substitute(IX, U, V) == X && substitute(IY, U, V) == Y;
    RatFunc2 target = canonical_flag(rec.type);
    ok = ok && bracket(K, U, V) == substitute(target, U, V);
    out.cov = cov;
    out.verified = ok;
    return out;
}

// family-(1) canonical form for exponents kappa = (k1, k2) of q x^{1+k1} y^{1+k2}
struct Family1Canonical {
    CanonicalType type;
    long long m[2][2] = {{1, 0}, {0, 1}}; // determinant-one lattice substitution
};

inline Family1Canonical canonicalize_family1(const Scalar& q, long long k1, long long k2) {
    Family1Canonical out;
    if (q.is_zero()) throw error(errc::invalid_argument, "q must be nonzero");
    if (k1 == 0 && k2 == 0) {
        out.type = CanonicalType::kq(q);
        return out;
    }
    PoissonField K(RatFunc2::laurent_monomial(q, 1 + k1, 1 + k2));
    detail::RecOut rec = detail::classify_monomial(q, 1 + k1, 1 + k2, K.flag, 0);
    out.type = rec.type;
    if (!rec.steps.empty()) {
        // recover the lattice matrix from the first (monomial) step
        const auto& st = rec.steps.front();
        auto expo = [](const RatFunc2& r) {
            ExpPair n = r.num.is_zero() ? ExpPair{0, 0} : r.num.leading_exp();
            ExpPair d = r.den.leading_exp();
            return ExpPair{n.a - d.a, n.b - d.b};
        };
        if (st.u.num.is_monomial() && st.v.num.is_monomial() && st.u.den.is_monomial() &&
            st.v.den.is_monomial()) {
            ExpPair eu = expo(st.u), ev = expo(st.v);
            if (eu.a * ev.b - eu.b * ev.a == 1) {
                out.m[0][0] = eu.a;
                out.m[0][1] = eu.b;
                out.m[1][0] = ev.a;
                out.m[1][1] = ev.b;
            }
        }
    }
    return out;
}

// isomorphism decision between resolved canonical types
inline bool iso_decide_canonical(const CanonicalType& a, const CanonicalType& b) {
    if (!a.resolved() || !b.resolved())
        throw error(errc::unresolved_input, "both types must be resolved");
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case CanonicalType::Kind::Weyl: return true;
    case CanonicalType::Kind::Kq: return a.q == b.q || a.q == -b.q;
    case CanonicalType::Kind::K1n0: return a.n == b.n;
    default: return false;
    }
}

inline std::string to_string(const CanonicalType& t) {
    switch (t.kind) {
    case CanonicalType::Kind::Weyl: return "Weyl";
    case CanonicalType::Kind::Kq: return "K_q(q=" + print_scalar(t.q) + ")";
    case CanonicalType::Kind::K1n0:
        return "K_{1," + std::to_string(t.n) + ",0}" +
               (t.q.is_one() ? std::string() : " (q=" + print_scalar(t.q) + ")");
    case CanonicalType::Kind::UnresolvedOverField: return "unresolved over the scalar field: " + t.reason;
    case CanonicalType::Kind::OutsideScope: return "outside scope: " + t.reason;
    }
    return "?";
}

} // namespace pfield
