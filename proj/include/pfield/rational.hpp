#pragma once

// Exact rational arithmetic. The heavy lifting (arbitrary-precision integers,
// canonical gcd-reduced fractions with positive denominator) is delegated to
// boost::multiprecision; this header adds the numeric utilities the rest of
// the library needs: integer powers, k-th root extraction, and rational root
// candidates for monic-cleared integer polynomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfield/errors.hpp"

namespace pfield {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline bool is_zero(const Rational& r) { return r == 0; }

inline Rational rat_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw error(errc::division_by_zero, "0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    unsigned long long k;
    if (e < 0) {
        b = Rational(rat_den(base), rat_num(base));
        k = static_cast<unsigned long long>(-e);
    } else {
        k = static_cast<unsigned long long>(e);
    }
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Floor of the k-th root of a non-negative integer, by Newton iteration.
inline Integer iroot_floor(const Integer& n, unsigned k) {
    if (n < 0) throw error(errc::invalid_argument, "iroot_floor of negative value");
    if (n == 0 || k == 1) return n;
    Integer x = Integer(1) << (static_cast<unsigned>(msb(n)) / k + 1);
    for (;;) {
        Integer xk = pow(x, k - 1);
        Integer nx = ((k - 1) * x + n / xk) / k;
        if (nx >= x) break;
        x = nx;
    }
    while (pow(x, k) > n) --x;
    return x;
}

inline std::optional<Integer> exact_iroot(const Integer& n, unsigned k) {
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-n, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    Integer r = iroot_floor(n, k);
    if (pow(r, k) == n) return r;
    return std::nullopt;
}

// Exact k-th root of a rational, if one exists in Q.
inline std::optional<Rational> exact_root(const Rational& q, unsigned k) {
    if (k == 0) throw error(errc::invalid_argument, "0-th root");
    auto rn = exact_iroot(rat_num(q), k);
    if (!rn) return std::nullopt;
    auto rd = exact_iroot(rat_den(q), k);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

namespace detail {

// All positive divisors of |n| by trial division. Throws RootsUnavailable
// when |n| exceeds the trial-division budget without fully factoring.
inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw error(errc::invalid_argument, "divisors of zero");
    std::vector<std::pair<Integer, unsigned>> fac;
    Integer m = n;
    auto push = [&](const Integer& p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) fac.emplace_back(p, e);
    };
    push(Integer(2));
    Integer d = 3;
    const Integer budget = 10'000'000;
    while (d * d <= m) {
        if (d > budget)
            throw error(errc::roots_unavailable, "integer too large to factor for root candidates");
        push(d);
        d += 2;
    }
    if (m > 1) fac.emplace_back(m, 1u);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t old = divs.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

} // namespace detail

inline std::string to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

} // namespace pfield
