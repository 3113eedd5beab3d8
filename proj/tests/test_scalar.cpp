#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using namespace pfield;

TEST_CASE("rational scalars reduce and stay canonical") {
    Scalar a{Rational(2, 4)};
    REQUIRE(a == Scalar(Rational(1, 2)));
    REQUIRE((a + a).is_one());
    REQUIRE((a - a).is_zero());
    REQUIRE(a.pow(-2) == Scalar(4));
    REQUIRE_THROWS_AS(a / Scalar(0), error);
}

TEST_CASE("Q(t) scalars reduce with monic denominator") {
    Scalar t = Scalar::t();
    Scalar s = (t * t - Scalar(1)) / (t + Scalar(1)); // (t^2-1)/(t+1) = t-1
    REQUIRE(s == t - Scalar(1));
    Scalar u = Scalar(1) / (Scalar(2) * t + Scalar(2));
    REQUIRE(u.tden().lc() == Rational(1)); // denominator made monic
    REQUIRE((u * (t + Scalar(1))) == Scalar(Rational(1, 2)));
    // constants demote to the rational branch
    Scalar c = (t + Scalar(3)) - t;
    REQUIRE(c.is_rational());
    REQUIRE(c == Scalar(3));
}

TEST_CASE("scalar field axioms on random samples") {
    pfgen::Rng rng(20240811);
    for (int i = 0; i < 100; ++i) {
        Scalar a{rng.rational()}, b{rng.rational()}, c{rng.rational()};
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
    }
    // and with a t mixed in
    Scalar t = Scalar::t();
    for (int i = 0; i < 30; ++i) {
        Scalar a = Scalar{rng.rational()} * t + Scalar{rng.rational()};
        Scalar b = t * t + Scalar{rng.nonzero_rational()};
        REQUIRE(a * (b + t) == a * b + a * t);
        REQUIRE((a * b) / b == a);
    }
}

TEST_CASE("integer root extraction") {
    REQUIRE(*exact_root(Rational(8), 3) == Rational(2));
    REQUIRE(*exact_root(Rational(-27, 8), 3) == Rational(-3, 2));
    REQUIRE(!exact_root(Rational(2), 2));
    REQUIRE(!exact_root(Rational(-4), 2));
    REQUIRE(*scalar_exact_root(Scalar(Rational(9, 4)), 2) == Scalar(Rational(3, 2)));
    REQUIRE(!scalar_exact_root(Scalar::t(), 2));
}

TEST_CASE("parser: representative fixtures") {
    RatFunc2 p = parse("x^2*y - 1/2");
    REQUIRE(p.is_polynomial());
    REQUIRE(p.num.coeff(2, 1) == Scalar(1));
    REQUIRE(p.num.coeff(0, 0) == Scalar(Rational(-1, 2)));
    REQUIRE(p.num.terms.size() == 2);

    RatFunc2 q = parse("(x-1)/(x*(x-2))");
    REQUIRE(q.num == parse("x-1").num);
    REQUIRE(q.den == parse("x^2-2*x").num);

    RatFunc2 r = parse("x^-3");
    REQUIRE(r.num == BiPoly(Scalar(1)));
    REQUIRE(r.den == BiPoly::monomial(Scalar(1), 3, 0));
}

TEST_CASE("parser: errors carry positions and modes are honored") {
    try {
        parse("x^2 + $");
        FAIL("expected syntax error");
    } catch (const syntax_error& e) {
        REQUIRE(e.position() == 6);
    }
    REQUIRE_THROWS_AS(parse("x*(y"), syntax_error);
    REQUIRE_THROWS_AS(parse("2 x"), syntax_error); // '*' is mandatory
    REQUIRE_THROWS_AS(parse("t+1", ScalarMode::Q), error); // t needs Q(t) mode
    REQUIRE_NOTHROW(parse("t+1", ScalarMode::Qt));
    REQUIRE_THROWS_AS(parse("1/(x-x)"), syntax_error);
    REQUIRE_THROWS_AS(parse("x^y"), syntax_error);
}

TEST_CASE("printer: canonical order and round trips") {
    REQUIRE(print_canonical(parse("y + x^2 + x*y")) == "x^2 + x*y + y");
    REQUIRE(print_canonical(parse("x^-3")) == "1/x^3");
    REQUIRE(print_canonical(parse("-x - 1/2")) == "-x - 1/2");
    REQUIRE(print_canonical(parse("(t^2+1)*x", ScalarMode::Qt)) == "(t^2 + 1)*x");

    pfgen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        RatFunc2 f = rng.ratfunc(4, 3);
        RatFunc2 g = parse(print_canonical(f), ScalarMode::Qt);
        REQUIRE(f == g);
    }
    // with t in the coefficients
    Scalar t = Scalar::t();
    RatFunc2 f = RatFunc2(BiPoly::monomial(t * t - Scalar(2), 2, 1)) /
                 RatFunc2(BiPoly::monomial(t, 0, 1) + BiPoly(Scalar(1)));
    REQUIRE(parse(print_canonical(f), ScalarMode::Qt) == f);
}
