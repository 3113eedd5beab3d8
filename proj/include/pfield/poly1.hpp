#pragma once

// Dense univariate polynomials over an exact field K. Used both for the
// parameter polynomials inside scalars (K = Rational) and for univariate
// work over the scalar field itself (K = Scalar).

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "pfield/errors.hpp"

namespace pfield {

template <class K>
struct Poly1 {
    // c[i] is the coefficient of v^i; no trailing zero entries.
    std::vector<K> c;

    Poly1() = default;
    explicit Poly1(K k) {
        if (!(k == K(0))) c.push_back(std::move(k));
    }
    static Poly1 variable() {
        Poly1 p;
        p.c = {K(0), K(1)};
        return p;
    }
    static Poly1 from_coeffs(std::vector<K> v) {
        Poly1 p;
        p.c = std::move(v);
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1 by convention
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    const K& lc() const { return c.back(); }
    K coeff(std::size_t i) const { return i < c.size() ? c[i] : K(0); }
    bool is_constant() const { return c.size() <= 1; }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c == b.c; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        Poly1 r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) {
        Poly1 r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    Poly1 operator-() const {
        Poly1 r = *this;
        for (auto& k : r.c) k = K(0) - k;
        return r;
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return Poly1();
        Poly1 r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend Poly1 operator*(const K& k, const Poly1& a) {
        Poly1 r = a;
        for (auto& x : r.c) x = k * x;
        r.trim();
        return r;
    }

    // Euclidean division; the divisor must be nonzero.
    friend std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
        if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
        Poly1 q, r = a;
        if (a.degree() >= b.degree()) q.c.assign(a.c.size() - b.c.size() + 1, K(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K f = r.lc() / b.lc();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            q.c[shift] = q.c[shift] + f;
            for (std::size_t i = 0; i < b.c.size(); ++i)
                r.c[shift + i] = r.c[shift + i] - f * b.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Poly1 monic() const {
        if (is_zero()) return *this;
        Poly1 r = *this;
        K inv = K(1) / lc();
        for (auto& x : r.c) x = inv * x;
        return r;
    }

    Poly1 derivative() const {
        Poly1 r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) {
            K m(0);
            for (std::size_t k = 0; k < i; ++k) m = m + K(1);
            r.c[i - 1] = m * c[i];
        }
        r.trim();
        return r;
    }

    K eval(const K& v) const {
        K acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
        return acc;
    }

    // p(q(v)) by Horner
    Poly1 compose(const Poly1& q) const {
        Poly1 acc;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + Poly1(c[i]);
        return acc;
    }

    Poly1 pow(unsigned e) const {
        Poly1 acc(K(1)), b = *this;
        while (e) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }
};

// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
template <class K>
Poly1<K> poly_gcd(Poly1<K> a, Poly1<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
std::optional<Poly1<K>> poly_divide_exact(const Poly1<K>& a, const Poly1<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

} // namespace pfield
