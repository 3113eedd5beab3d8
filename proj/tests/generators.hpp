#pragma once

// Deterministic random generators shared by the property tests.

#include <random>
#include <vector>

#include "pfield/pfield.hpp"

namespace pfgen {

using namespace pfield;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long long seed) : eng(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }
    Rational rational(long long maxabs = 6) {
        long long num = integer(-maxabs, maxabs);
        long long den = integer(1, maxabs);
        return Rational(num, den);
    }
    Rational nonzero_rational(long long maxabs = 6) {
        for (;;) {
            Rational r = rational(maxabs);
            if (r != 0) return r;
        }
    }

    BiPoly bipoly(long long maxdeg, int terms, long long coef = 5) {
        BiPoly p;
        for (int i = 0; i < terms; ++i) {
            long long a = integer(0, maxdeg);
            long long b = integer(0, maxdeg - a);
            p.add_term({a, b}, Scalar(rational(coef)));
        }
        return p;
    }
    BiPoly nonzero_bipoly(long long maxdeg, int terms, long long coef = 5) {
        for (;;) {
            BiPoly p = bipoly(maxdeg, terms, coef);
            if (!p.is_zero()) return p;
        }
    }
    RatFunc2 ratfunc(long long maxdeg, int terms) {
        return RatFunc2(bipoly(maxdeg, terms), nonzero_bipoly(maxdeg, terms));
    }
    RatFunc2 nonzero_ratfunc(long long maxdeg, int terms) {
        for (;;) {
            RatFunc2 f = ratfunc(maxdeg, terms);
            if (!f.is_zero()) return f;
        }
    }
    RatFunc2 poly(long long maxdeg, int terms) { return RatFunc2(bipoly(maxdeg, terms)); }

    std::vector<Scalar> distinct_rationals(int n, long long maxabs = 8) {
        std::vector<Scalar> out;
        while (static_cast<int>(out.size()) < n) {
            Scalar c{rational(maxabs)};
            bool dup = false;
            for (const auto& o : out)
                if (o == c) dup = true;
            if (!dup) out.push_back(c);
        }
        return out;
    }
};

} // namespace pfgen
