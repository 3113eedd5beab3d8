#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using namespace pfield;

namespace {

RatUni ratuni_one() { return RatUni(XPoly(Scalar(1))); }

PowerProduct pp(Scalar scale, std::vector<std::pair<Scalar, long long>> fac) {
    return PowerProduct(std::move(scale), std::move(fac));
}

} // namespace

TEST_CASE("residues of a power product") {
    PowerProduct s1 = pp(Scalar(1), {{Scalar(0), 2}});
    auto r1 = logderiv_residues(s1);
    REQUIRE(r1.size() == 1);
    REQUIRE(r1[0] == std::make_pair(Scalar(0), 2LL));

    PowerProduct s2 = pp(Scalar(1), {{Scalar(0), -2}, {Scalar(1), 1}, {Scalar(-1), 1}});
    auto r2 = logderiv_residues(s2);
    REQUIRE(r2.size() == 3);

    // the reconstruction sum z_i/(v-a_i) equals s'/s exactly
    for (const PowerProduct& s : {s1, s2}) {
        RatUni e = s.expand();
        REQUIRE(e.derivative() / e == s.log_derivative());
    }

    // hand oracle: s = (t-2)/t has s'/s = 2/(t(t-2))
    PowerProduct s3 = pp(Scalar(1), {{Scalar(2), 1}, {Scalar(0), -1}});
    XPoly den = XPoly::from_coeffs({Scalar(0), Scalar(-2), Scalar(1)}); // t^2 - 2t
    REQUIRE(s3.log_derivative() == RatUni(XPoly(Scalar(2)), den));
}

TEST_CASE("inverse logarithmic derivative: fixtures") {
    // f = (1/2) t (t-1)(t+1)  ->  s = t^{-2} (t-1)(t+1)
    SplitPoly f1(Scalar(Rational(1, 2)), {Scalar(0), Scalar(1), Scalar(-1)});
    auto s1 = solve_inverse_logderiv(f1);
    REQUIRE(s1.has_value());
    REQUIRE(s1->factors ==
            std::vector<std::pair<Scalar, long long>>{
                {Scalar(0), -2}, {Scalar(1), 1}, {Scalar(-1), 1}});
    REQUIRE(s1->log_derivative() * RatUni(f1.expand()) == ratuni_one());

    // f = t (t-1)(t-3): the exponent at 0 would be 1/3
    SplitPoly f2(Scalar(1), {Scalar(0), Scalar(1), Scalar(3)});
    REQUIRE(!solve_inverse_logderiv(f2).has_value());

    // f = (1/2) t (t-2) -> s = t^{-1} (t-2)
    SplitPoly f3(Scalar(Rational(1, 2)), {Scalar(0), Scalar(2)});
    auto s3 = solve_inverse_logderiv(f3);
    REQUIRE(s3.has_value());
    REQUIRE(s3->factors ==
            std::vector<std::pair<Scalar, long long>>{{Scalar(0), -1}, {Scalar(2), 1}});
    REQUIRE(s3->log_derivative() * RatUni(f3.expand()) == ratuni_one());

    REQUIRE_THROWS_AS(solve_inverse_logderiv(SplitPoly(Scalar(2), {})), error);
}

TEST_CASE("trace conditions on the candidate exponents") {
    SplitPoly f1(Scalar(Rational(1, 2)), {Scalar(0), Scalar(1), Scalar(-1)});
    auto n1 = necessary_conditions(f1);
    REQUIRE(n1.sum_zero);
    REQUIRE(n1.moment_zero);

    SplitPoly f2(Scalar(1), {Scalar(0), Scalar(1), Scalar(2)});
    auto n2 = necessary_conditions(f2);
    REQUIRE(n2.zs == std::vector<Scalar>{Scalar(Rational(1, 2)), Scalar(-1),
                                         Scalar(Rational(1, 2))});
    REQUIRE(n2.sum_zero);
    REQUIRE(n2.moment_zero);

    // scaling gamma from 1/2 to 6 divides every candidate exponent by 12
    SplitPoly f3(Scalar(6), {Scalar(0), Scalar(1), Scalar(-1)});
    auto n3 = necessary_conditions(f3);
    REQUIRE(n3.zs[0] == Scalar(Rational(-1, 6)));
    REQUIRE(n3.sum_zero);
    REQUIRE(n3.moment_zero);

    REQUIRE_THROWS_AS(necessary_conditions(SplitPoly(Scalar(1), {Scalar(0), Scalar(1)})), error);
}

TEST_CASE("round trip through the solvability construction") {
    pfgen::Rng rng(31337);
    int done = 0;
    while (done < 100) {
        int n = static_cast<int>(rng.integer(3, 5));
        std::vector<Scalar> roots = rng.distinct_rationals(n);
        // gamma^{-1} := L makes every candidate exponent integral
        Integer L = 1;
        std::vector<Rational> weights;
        for (int i = 0; i < n; ++i) {
            Rational prod(1);
            for (int j = 0; j < n; ++j)
                if (j != i) prod *= (roots[i].rational() - roots[j].rational());
            Rational w = Rational(1) / prod;
            weights.push_back(w);
            L = boost::multiprecision::lcm(L, rat_den(w));
        }
        L *= rng.integer(1, 2);
        std::vector<std::pair<Scalar, long long>> fac;
        Scalar zsum(0), zmoment(0);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            Rational z = weights[i] * L;
            if (z == 0) ok = false; // exponents must be nonzero
            fac.emplace_back(roots[i], static_cast<long long>(rat_num(z)));
            zsum = zsum + Scalar(z);
            zmoment = zmoment + Scalar(z) * roots[i];
        }
        if (!ok) continue;
        REQUIRE(zsum.is_zero());    // trace conditions hold by construction
        REQUIRE(zmoment.is_zero());
        PowerProduct s(Scalar(1), fac);

        // f := reciprocal of s'/s is a split polynomial with the same roots
        RatUni ld = s.log_derivative();
        RatUni f = RatUni(XPoly(Scalar(1))) / ld;
        REQUIRE(f.den.is_constant()); // it really is a polynomial
        SplitPoly fs(Scalar(1) / Scalar(Rational(L)), roots);
        REQUIRE(RatUni(fs.expand()) == f);

        auto back = solve_inverse_logderiv(fs);
        REQUIRE(back.has_value());
        // same factors up to ordering (the scale is normalized away)
        auto sorted = [](std::vector<std::pair<Scalar, long long>> v) {
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            });
            return v;
        };
        REQUIRE(sorted(back->factors) == sorted(fac));
        auto nc = necessary_conditions(fs); // solvable => both flags true
        REQUIRE(nc.sum_zero);
        REQUIRE(nc.moment_zero);
        ++done;
    }
}
