#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using namespace pfield;

namespace {

XPoly xpoly(std::vector<Scalar> c) { return XPoly::from_coeffs(std::move(c)); }

XPoly monic_from_roots(const std::vector<Scalar>& roots) {
    XPoly p(Scalar(1));
    for (const auto& r : roots) p = p * xpoly({-r, Scalar(1)});
    return p;
}

bool contains_map(const std::vector<AffineMap>& maps, const AffineMap& m) {
    for (const auto& g : maps)
        if (g == m) return true;
    return false;
}

} // namespace

TEST_CASE("equivalence parameters for p(x)xy flags") {
    XPoly p = xpoly({Scalar(1), Scalar(0), Scalar(1)}); // x^2 + 1
    auto e1 = iso_family2(p, p);
    REQUIRE(e1.size() == 2);
    REQUIRE(e1[0] == EquivParams{Scalar(-1), Scalar(0), 1});
    REQUIRE(e1[1] == EquivParams{Scalar(1), Scalar(0), 1});

    XPoly pa = xpoly({Scalar(0), Scalar(1), Scalar(1)});  // x^2 + x
    XPoly pb = xpoly({Scalar(0), Scalar(-1), Scalar(1)}); // x^2 - x
    auto e2 = iso_family2(pa, pb);
    REQUIRE(e2.size() == 1);
    REQUIRE(e2[0] == EquivParams{Scalar(-1), Scalar(0), 1});

    XPoly pc = xpoly({Scalar(0), Scalar(0), Scalar(1)}); // x^2
    REQUIRE(iso_family2(pc, p).empty());

    REQUIRE_THROWS_AS(iso_family2(xpoly({Scalar(1), Scalar(2)}), p), error); // not monic
}

TEST_CASE("returned equivalence parameters satisfy the defining identity") {
    pfgen::Rng rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.integer(2, 4));
        XPoly p1 = monic_from_roots(rng.distinct_rationals(d, 4));
        XPoly p2 = monic_from_roots(rng.distinct_rationals(d, 4));
        for (const XPoly* other : {&p1, &p2}) {
            auto eq = iso_family2(p1, *other);
            REQUIRE(static_cast<long long>(eq.size()) <= 2 * d * (d + 1));
            for (const auto& g : eq) {
                XPoly lin = xpoly({-g.b, g.a});
                REQUIRE(g.a.inverse() * (lin * p1.compose(lin)) ==
                        Scalar(g.e) * (XPoly::variable() * *other));
            }
        }
    }
}

TEST_CASE("automorphism data for p(x)xy flags") {
    XPoly p = xpoly({Scalar(1), Scalar(0), Scalar(1)}); // x^2 + 1
    GroupReport r = aut_family2(p);
    REQUIRE(*r.quotient_order == 2);
    REQUIRE(!r.order.has_value()); // infinite: kernel k(x)^x
    REQUIRE(*r.exact_sequence == "1 -> k(x)^x -> Aut -> G_p -> 1");
    REQUIRE(r.group_axioms_ok);
    REQUIRE(*r.quotient_order <= 2 * 3);

    XPoly psq = xpoly({Scalar(0), Scalar(0), Scalar(1)}); // x^2
    REQUIRE(*aut_family2(psq).quotient_order == 2);

    REQUIRE_THROWS_AS(aut_family2(xpoly({Scalar(0), Scalar(1)})), error); // degree too small

    // over Q(t): distinct roots t, t^2 are independent with distinct powers
    Scalar t = Scalar::t();
    std::vector<Scalar> roots{t, t * t};
    XPoly pt = monic_from_roots(roots);
    GroupReport rt = aut_family2(pt, roots);
    REQUIRE(*rt.quotient_order == 1);
    REQUIRE(!rt.notes.empty());
    // without the factored roots the enumeration cannot run over Q(t)
    REQUIRE_THROWS_AS(iso_family2(pt, pt), error);
}

TEST_CASE("triviality hypotheses for split product flags") {
    Scalar t = Scalar::t();
    auto r1 = trivial_aut_criteria({Scalar(0), Scalar(1), Scalar(2)},
                                   {Scalar(0), Scalar(1), Scalar(3)});
    REQUIRE(!r1.applies);
    REQUIRE(*r1.failed_hypothesis == 'c'); // rationals are never independent

    auto r2 = trivial_aut_criteria({Scalar(0), t, t.pow(4)}, {Scalar(0), t * t, t.pow(5)});
    REQUIRE(r2.applies);

    auto r3 = trivial_aut_criteria({Scalar(0), t, t * t, t.pow(3)},
                                   {Scalar(0), t.pow(4), t.pow(5), t.pow(6)});
    REQUIRE(!r3.applies);
    REQUIRE(*r3.failed_hypothesis == 'b'); // m = n even

    REQUIRE_THROWS_AS(trivial_aut_criteria({Scalar(0), t}, {Scalar(0), t, t * t}), error);
}

TEST_CASE("affine isomorphism search: fixtures") {
    FactoredFlag F = make_factored("x*y*(x+y)*(x+2*y)");
    FactoredFlag G = make_factored("y*(x+y)*(x+2*y)*(x+3*y)");
    auto maps = affine_iso_search(F, G);
    REQUIRE(!maps.empty());
    AffineMap shear; // x -> x + y, y -> y
    shear.c12 = Scalar(1);
    REQUIRE(contains_map(maps, shear));
    for (const auto& m : maps) // every returned map satisfies the rescaling identity
        REQUIRE(m.apply(F.expand()) == Scalar(m.det()) * G.expand());

    FactoredFlag G2 = make_factored("x*y*(x+y)*(x+3*y)");
    REQUIRE(affine_iso_search(F, G2).empty());

    REQUIRE_THROWS_AS(affine_iso_search(make_factored("x*y*(x+1)"), make_factored("x*y*(y+1)")),
                      error); // source not flabby
    REQUIRE_THROWS_AS(affine_iso_search(F, make_factored("x*y*(x+y)")), error); // degree mismatch
}

TEST_CASE("automorphism groups of factored flags") {
    GroupReport r = aut_group(make_factored("x*y*(x^2-1)*(y^2-1)"));
    REQUIRE(*r.order == 4); // (m-1)(n-1) with m = n = 3: the maximum
    REQUIRE(r.group_axioms_ok);
    REQUIRE(*r.m_star == 2);
    REQUIRE(*r.n_star == 2);
    AffineMap flip; // x -> -x, y -> -y
    flip.c11 = Scalar(-1);
    flip.c22 = Scalar(-1);
    REQUIRE(contains_map(r.finite_part, flip));

    GroupReport r2 = aut_group(make_factored("x*y*(x+y)*(x+2*y)"));
    REQUIRE(r2.group_axioms_ok);
    REQUIRE(contains_map(r2.finite_part, flip));
    REQUIRE(*r2.order <= (4 - 2) * 24); // degree-4 bound (n-2) n!
    // the four factor directions are harmonic, so the group is larger than
    // just {1, -1}: eight affine maps, each verified exactly
    REQUIRE(*r2.order == 8);
}

TEST_CASE("embedding decision table") {
    auto weyl = CanonicalType::weyl();
    auto kq = [](long long q) { return CanonicalType::kq(Scalar(q)); };
    auto k1n0 = [](long long n) { return CanonicalType::k1n0(n, Scalar(1)); };

    auto e = embed_decide(kq(6), kq(2));
    REQUIRE(e.embeds);
    REQUIRE(e.witness->gen_v == parse("y^3")); // subfield k(x, y^3)
    REQUIRE(e.witness->verified);

    REQUIRE(!embed_decide(kq(1), kq(2)).embeds);
    REQUIRE(embed_decide(k1n0(2), k1n0(4)).embeds);
    REQUIRE(embed_decide(k1n0(2), k1n0(4)).witness->verified);
    REQUIRE(!embed_decide(k1n0(3), k1n0(4)).embeds);
    REQUIRE(!embed_decide(kq(1), weyl).embeds);
    REQUIRE(!embed_decide(k1n0(2), weyl).embeds);
    REQUIRE(!embed_decide(weyl, kq(1)).embeds);
    REQUIRE(!embed_decide(k1n0(2), kq(1)).embeds);

    auto ew = embed_decide(weyl, k1n0(3));
    REQUIRE(ew.embeds);
    REQUIRE(ew.witness->gen_u == parse("x^-3"));
    REQUIRE(ew.witness->verified);

    REQUIRE(embed_decide(weyl, weyl).embeds);
    REQUIRE(embed_decide(kq(2), kq(2)).embeds);
    REQUIRE_THROWS_AS(embed_decide(weyl, CanonicalType::outside("?")), error);
}

TEST_CASE("mutual embeddings happen only between isomorphic types") {
    std::vector<CanonicalType> types{CanonicalType::weyl(), CanonicalType::kq(Scalar(2)),
                                     CanonicalType::kq(Scalar(-2)), CanonicalType::kq(Scalar(3)),
                                     CanonicalType::k1n0(2, Scalar(1)),
                                     CanonicalType::k1n0(4, Scalar(1))};
    for (const auto& a : types)
        for (const auto& b : types) {
            bool mutual = embed_decide(a, b).embeds && embed_decide(b, a).embeds;
            if (mutual) REQUIRE(iso_decide_canonical(a, b));
        }
}

TEST_CASE("subfield witnesses verify their brackets") {
    auto w1 = subfield_weyl_from_x(parse("x^3"));
    REQUIRE(w1.verified);
    REQUIRE(w1.gen_v == parse("y/(3*x^2)"));
    REQUIRE(w1.target_flag == RatFunc2(1));

    auto w2 = subfield_torus(Scalar(5), 1, 1, 1, -1);
    REQUIRE(w2.verified);
    REQUIRE(w2.target_flag == parse("-10*x*y")); // (ad - bc) q = -2 q

    auto w3 = subfield_cubic(Scalar(1), Scalar(3), 3, -1);
    REQUIRE(w3.verified);
    REQUIRE(w3.target_flag == parse("-6*x*y")); // lambda = s0 a1 a2 = -6
    REQUIRE(w3.gen_u == parse("(x-1)^3/(x^2*(x-3))"));

    auto w4 = subfield_weyl_power(-2);
    REQUIRE(w4.verified);

    auto w5 = subfield_monomial(Scalar(3), 1, 2, 2, 1);
    REQUIRE(w5.verified);

    auto w6 = subfield_shifted(Scalar(2), Scalar(5), 3);
    REQUIRE(w6.verified);
    REQUIRE(w6.target_flag == parse("15*x*y"));

    auto w7 = subfield_weyl_xm(3, parse("y^2+1"));
    REQUIRE(w7.verified);
    REQUIRE(w7.target_flag == parse("-2*(y^2+1)"));

    // the identity hypothesis is checked, not assumed
    REQUIRE_THROWS_AS(subfield_power_r(parse("x^2"), parse("y"), 1, Scalar(1), parse("x+1")),
                      error);
    auto w8 = subfield_power_r(parse("x^2"), parse("y"), 2, Scalar(-1), parse("-x"));
    REQUIRE(w8.verified); // p = -x solves p'/p^2 = -1/x^2
}

TEST_CASE("Dixmier verdicts") {
    auto yes1 = dixmier_report(PoissonField(parse("(x^2-1)*x*y")));
    REQUIRE(yes1.verdict == DixmierReport::Verdict::Yes);

    auto yes2 = dixmier_report(PoissonField(make_factored("x*y*(x+y)*(x+2*y)")));
    REQUIRE(yes2.verdict == DixmierReport::Verdict::Yes);

    auto no1 = dixmier_report(PoissonField(parse("1")));
    REQUIRE(no1.verdict == DixmierReport::Verdict::No);
    REQUIRE(no1.certificate_verified);
    REQUIRE(no1.endo_images->first == parse("x^3"));

    auto no2 = dixmier_report(PoissonField(parse("3*x*y")));
    REQUIRE(no2.verdict == DixmierReport::Verdict::No);
    REQUIRE(no2.certificate_verified);

    auto no3 = dixmier_report(PoissonField(parse("x^3*y")));
    REQUIRE(no3.verdict == DixmierReport::Verdict::No);
    REQUIRE(no3.certificate_verified);
    REQUIRE(no3.endo_images->second == parse("y^4")); // z = 2^n with n = 2

    auto unk = dixmier_report(PoissonField(parse("x^2+y^3")));
    REQUIRE(unk.verdict == DixmierReport::Verdict::Unknown);
}

TEST_CASE("structure of the monomial-family automorphism groups") {
    GroupReport r3 = aut_family1_structure(3);
    REQUIRE(!r3.order.has_value());
    bool split = false;
    for (const auto& n : r3.notes)
        if (n.find("right-split") == 0) split = true;
    REQUIRE(split);

    GroupReport r4 = aut_family1_structure(4);
    bool nonsplit = false;
    for (const auto& n : r4.notes)
        if (n.find("not right-split") != std::string::npos) nonsplit = true;
    REQUIRE(nonsplit);

    GroupReport r2 = aut_family1_structure(2);
    bool no_tau = false;
    for (const auto& n : r2.notes)
        if (n.find("none") != std::string::npos) no_tau = true;
    REQUIRE(no_tau);
}
