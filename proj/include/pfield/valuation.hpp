#pragma once

// Monomial Poisson valuations nu(x) = z1, nu(y) = z2, their w-levels on a
// given flag, flabbiness of factored flags, the proven degree-0 invariant
// subalgebras per family, and flag/valuation heights with mechanically
// checkable witnesses. Only the achievable side (witness valuations) is
// verified by computation; the matching lower bounds are family facts and
// are reported with the rule that proves them.

#include <optional>
#include <string>
#include <utility>

#include "pfield/classify.hpp"
#include "pfield/flagbounds.hpp"
#include "pfield/poisson.hpp"

namespace pfield {

struct MonomialValuation {
    long long zx = 0, zy = 0;
    friend bool operator==(const MonomialValuation& a, const MonomialValuation& b) {
        return a.zx == b.zx && a.zy == b.zy;
    }
};

// value of a valuation: an integer or +infinity (only for 0)
struct ValInt {
    bool infinite = false;
    long long v = 0;
    static ValInt inf() { return {true, 0}; }
    static ValInt of(long long x) { return {false, x}; }
    friend bool operator==(const ValInt& a, const ValInt& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
};

inline ValInt mono_val(const MonomialValuation& nu, const BiPoly& p) {
    if (p.is_zero()) return ValInt::inf();
    bool first = true;
    long long best = 0;
    for (const auto& [e, c] : p.terms) {
        long long val = e.a * nu.zx + e.b * nu.zy;
        if (first || val < best) best = val;
        first = false;
    }
    return ValInt::of(best);
}

inline ValInt mono_val(const MonomialValuation& nu, const RatFunc2& f) {
    if (f.is_zero()) return ValInt::inf();
    return ValInt::of(mono_val(nu, f.num).v - mono_val(nu, f.den).v);
}

// minimal w such that nu is a w-valuation on K{flag}: z1 + z2 - nu(flag)
inline long long w_level(const MonomialValuation& nu, const RatFunc2& flag) {
    if (flag.is_zero()) throw error(errc::invalid_argument, "flag must be nonzero");
    return nu.zx + nu.zy - mono_val(nu, flag).v;
}

struct FlabbyReport {
    bool flabby = false;
    std::optional<std::size_t> failing_index; // factor with < 3 independent partners
};

// Every factor needs at least three partners with a non-proportional linear
// part. Requires pairwise non-associate forms with multiplicity one and no
// monomial prefactor outside the factor list.
inline FlabbyReport is_flabby(const FactoredFlag& F) {
    if (F.ex != 0 || F.ey != 0)
        throw error(errc::not_distinct_forms, "monomial prefactor must appear as factors");
    const auto& fs = F.factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].second != 1)
            throw error(errc::not_distinct_forms, "multiplicities must all be one");
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (fs[i].first.is_associate(fs[j].first))
                throw error(errc::not_distinct_forms, "factors must be pairwise non-associate");
    }
    if (fs.empty()) return {false, std::nullopt};
    for (std::size_t i = 0; i < fs.size(); ++i) {
        int partners = 0;
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (j != i && !fs[i].first.proportional_linear_part(fs[j].first)) ++partners;
        if (partners < 3) return {false, i};
    }
    return {true, std::nullopt};
}

enum class Gamma1 { ScalarsOnly, PolyX, PolyY, PolyXY, Unsupported };

struct Gamma1Report {
    Gamma1 value = Gamma1::Unsupported;
    std::string rule;
};

inline std::string to_string(Gamma1 g) {
    switch (g) {
    case Gamma1::ScalarsOnly: return "k";
    case Gamma1::PolyX: return "k[x]";
    case Gamma1::PolyY: return "k[y]";
    case Gamma1::PolyXY: return "k[x,y]";
    case Gamma1::Unsupported: return "unsupported";
    }
    return "?";
}

namespace detail {

// flag = p(x) * x * y with deg p >= 2 (or the mirrored version)
struct FamilyTwoShape {
    XPoly p;
    bool mirrored = false; // true: p(y) * x * y
};

inline std::optional<FamilyTwoShape> family_two_shape(const RatFunc2& flag) {
    if (!flag.is_polynomial()) return std::nullopt;
    auto sep = separable_product(flag.num);
    if (!sep) return std::nullopt;
    auto strip_once = [](const XPoly& g) -> std::optional<XPoly> {
        if (g.c.empty() || !g.c[0].is_zero()) return std::nullopt; // needs a factor of the variable
        XPoly r;
        r.c.assign(g.c.begin() + 1, g.c.end());
        return r;
    };
    // x-side carries p(x) x, y-side is c y
    if (sep->gy.degree() == 1 && sep->gy.coeff(0).is_zero()) {
        if (auto px = strip_once(sep->fx)) {
            if (px->degree() >= 2) return FamilyTwoShape{sep->gy.lc() * *px, false};
        }
    }
    if (sep->fx.degree() == 1 && sep->fx.coeff(0).is_zero()) {
        if (auto py = strip_once(sep->gy)) {
            if (py->degree() >= 2) return FamilyTwoShape{sep->fx.lc() * *py, true};
        }
    }
    return std::nullopt;
}

inline std::optional<FactoredFlag> usable_factored(const PoissonField& K) {
    if (!K.factored) return std::nullopt;
    const FactoredFlag& F = *K.factored;
    if (F.ex != 0 || F.ey != 0) return std::nullopt;
    for (const auto& [l, m] : F.factors)
        if (m != 1) return std::nullopt;
    return F;
}

} // namespace detail

// the degree-0 subalgebra of elements nonnegative under every nontrivial
// 1-valuation, for the families where it is known
inline Gamma1Report gamma1_zero(const PoissonField& K) {
    if (auto f2 = detail::family_two_shape(K.flag)) {
        // covers q x^{n+1} y as the monomial special case
        return {f2->mirrored ? Gamma1::PolyY : Gamma1::PolyX, "flag-times-xy-invariant"};
    }
    if (auto F = detail::usable_factored(K)) {
        try {
            if (is_flabby(*F).flabby) return {Gamma1::PolyXY, "flabby-flag-invariant"};
        } catch (const error&) {
        }
    }
    ClassifyResult cls = classify_flag(K);
    if (cls.type.kind == CanonicalType::Kind::Weyl && cls.verified)
        return {Gamma1::ScalarsOnly, "weyl-invariant"};
    if (cls.type.kind == CanonicalType::Kind::Kq && cls.verified)
        return {Gamma1::ScalarsOnly, "q-skew-invariant"};
    if (cls.type.kind == CanonicalType::Kind::K1n0 && cls.verified) {
        // the invariant is k[u] for the canonical generator u; report it only
        // when u is x or y in the given presentation
        if (cls.cov->fwd_u == RatFunc2::x()) return {Gamma1::PolyX, "monomial-family-invariant"};
        if (cls.cov->fwd_u == RatFunc2::y()) return {Gamma1::PolyY, "monomial-family-invariant"};
    }
    return {Gamma1::Unsupported, "no applicable rule"};
}

struct ExtInt {
    enum class Kind { Finite, PlusInf, MinusInf } kind = Kind::Finite;
    long long v = 0;
    static ExtInt of(long long x) { return {Kind::Finite, x}; }
    static ExtInt plus_inf() { return {Kind::PlusInf, 0}; }
    static ExtInt minus_inf() { return {Kind::MinusInf, 0}; }
    bool finite() const { return kind == Kind::Finite; }
    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.v == b.v);
    }
    std::string str() const {
        if (kind == Kind::PlusInf) return "inf";
        if (kind == Kind::MinusInf) return "-inf";
        return std::to_string(v);
    }
};

struct HeightReport {
    ExtInt flag_height;
    std::optional<ExtInt> valuation_height1;       // absent: not determined
    std::optional<MonomialValuation> witness;      // passes verify_witness at witness_w
    long long witness_w = 0;
    RatFunc2 witness_flag;                         // presentation the witness lives on
    bool cohereditary_known = false;               // true => height cohereditary
    std::string rule;
    std::optional<InfiniteFlagCertificate> certificate;
};

// witness check: the valuation really sits at the claimed w-level, and for
// the standard witness (-1,-1) on a polynomial flag the level is deg - 2
// with both generators at negative value
inline bool verify_witness(const PoissonField& K, const MonomialValuation& nu, long long claimed_w) {
    if (w_level(nu, K.flag) != claimed_w) return false;
    if (nu.zx == -1 && nu.zy == -1 && K.flag.is_polynomial()) {
        if (claimed_w != K.flag.num.total_degree() - 2) return false;
        if (!(nu.zx < 0 && nu.zy < 0)) return false;
    }
    return true;
}

inline HeightReport height(const PoissonField& K) {
    HeightReport out;
    auto finite_case = [&](long long fht, const RatFunc2& witness_flag, const std::string& rule) {
        out.flag_height = ExtInt::of(fht);
        out.valuation_height1 = ExtInt::of(fht);
        out.witness = MonomialValuation{-1, -1};
        out.witness_w = fht - 2;
        out.witness_flag = witness_flag;
        out.rule = rule;
        if (!verify_witness(PoissonField(witness_flag, K.mode), *out.witness, out.witness_w))
            throw error(errc::invalid_argument, "internal: height witness failed verification");
    };

    if (auto f2 = detail::family_two_shape(K.flag)) {
        long long d = f2->p.degree();
        finite_case(d + 2, K.flag, "flag-times-xy-height");
        out.cohereditary_known = true; // valuation and flag heights agree
        return out;
    }
    if (auto F = detail::usable_factored(K)) {
        bool flabby = false;
        try {
            flabby = is_flabby(*F).flabby;
        } catch (const error&) {
        }
        if (flabby) {
            finite_case(K.flag.num.total_degree(), K.flag, "flabby-flag-height");
            out.cohereditary_known = true;
            return out;
        }
    }
    ClassifyResult cls = classify_flag(K);
    if (cls.verified) {
        switch (cls.type.kind) {
        case CanonicalType::Kind::Weyl:
            out.flag_height = ExtInt::of(0);
            out.valuation_height1 = ExtInt::minus_inf();
            out.witness = MonomialValuation{-1, -1};
            out.witness_w = -2;
            out.witness_flag = RatFunc2(1);
            out.rule = "weyl-height";
            out.cohereditary_known = true; // nothing has smaller flag height
            return out;
        case CanonicalType::Kind::Kq:
            finite_case(2, canonical_flag(cls.type), "q-skew-height");
            out.cohereditary_known = true;
            return out;
        case CanonicalType::Kind::K1n0:
            finite_case(cls.type.n + 2, canonical_flag(cls.type), "monomial-family-height");
            out.cohereditary_known = true;
            return out;
        default: break;
        }
    }
    throw error(errc::unsupported, "no height rule applies to this flag");
}

// flags built with an explicit small-denominator obstruction have no
// polynomial presentation at all
inline HeightReport height(const PoissonField& K, const InfiniteFlagCertificate& cert) {
    if (!(K.flag == cert.flag))
        throw error(errc::invalid_argument, "certificate does not match the field");
    HeightReport out;
    out.flag_height = ExtInt::plus_inf();
    out.valuation_height1 = std::nullopt; // not determined by the certificate
    out.rule = "infinite-flag-certificate";
    out.certificate = cert;
    return out;
}

} // namespace pfield
