#pragma once

// Brackets on K = k(x,y). Everything is driven by the Jacobian formula:
// a flag f determines the unique Poisson bracket with {x,y} = f, and
// {g,h} = (g_x h_y - g_y h_x) * f for all g, h.

#include <optional>
#include <utility>

#include "pfield/factored.hpp"
#include "pfield/ratfunc.hpp"

namespace pfield {

struct PoissonField {
    RatFunc2 flag;
    ScalarMode mode = ScalarMode::Q;
    std::optional<FactoredFlag> factored;

    explicit PoissonField(RatFunc2 f, ScalarMode m = ScalarMode::Q)
        : flag(std::move(f)), mode(m) {
        if (flag.is_zero()) throw error(errc::invalid_argument, "flag must be nonzero");
    }
    PoissonField(FactoredFlag ff, ScalarMode m = ScalarMode::Q)
        : flag(ff.expand()), mode(m), factored(std::move(ff)) {
        if (flag.is_zero()) throw error(errc::invalid_argument, "flag must be nonzero");
    }

    static PoissonField weyl() { return PoissonField(RatFunc2(1)); }
    static PoissonField q_skew(const Scalar& q) {
        return PoissonField(RatFunc2(q * (BiPoly::x() * BiPoly::y())));
    }
    // K{q x^{n+1} y}
    static PoissonField k1n0(long long n, const Scalar& q = Scalar(1)) {
        return PoissonField(RatFunc2(BiPoly::monomial(q, n + 1, 1)));
    }
};

inline RatFunc2 weyl_bracket(const RatFunc2& g, const RatFunc2& h) {
    return partial_derivative(g, Var::x) * partial_derivative(h, Var::y) -
           partial_derivative(g, Var::y) * partial_derivative(h, Var::x);
}

inline RatFunc2 bracket(const PoissonField& K, const RatFunc2& g, const RatFunc2& h) {
    return weyl_bracket(g, h) * K.flag;
}

// {x^a y^b, x^c y^d} = (ad - bc) x^{a+c-1} y^{b+d-1} {x,y}, all integer exponents
inline RatFunc2 monomial_bracket(const RatFunc2& flag, long long a, long long b, long long c,
                                 long long d) {
    long long det = a * d - b * c;
    if (det == 0) return RatFunc2();
    return Scalar(det) * (RatFunc2::laurent_monomial(Scalar(1), a + c - 1, b + d - 1) * flag);
}

// {{a,b},c} + {{c,a},b} + {{b,c},a} under the bracket twisted by `flag`;
// identically zero for every two-variable flag
inline RatFunc2 jacobiator(const RatFunc2& flag, const RatFunc2& a, const RatFunc2& b,
                           const RatFunc2& c) {
    auto br = [&](const RatFunc2& u, const RatFunc2& v) { return weyl_bracket(u, v) * flag; };
    return br(br(a, b), c) + br(br(c, a), b) + br(br(b, c), a);
}

} // namespace pfield
