#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using namespace pfield;

namespace {

BoundedElement shifted_x(std::vector<Scalar> a, std::vector<Scalar> b) {
    return BoundedElement(RatFunc2::x(), std::move(a), std::move(b));
}

XPoly t_power(unsigned k) {
    std::vector<Scalar> c(k + 1, Scalar(0));
    c.back() = Scalar(1);
    return XPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("denominator bounds for certified shapes") {
    // h = (x-1) / (x (x-2))
    BoundedElement h1 = shifted_x({Scalar(1)}, {Scalar(0), Scalar(2)});
    DenominatorBounds b1 = bounds_certified(h1);
    REQUIRE(b1.dpb_lower == 1);
    REQUIRE(*b1.ddb_exact == 1);
    REQUIRE(*b1.dpb_exact == 1);
    REQUIRE(*b1.fdb_exact == 1);
    REQUIRE(*b1.frame_den_degree == 1); // recomputed in the frame (1/x, y)

    // h = 1/x is a framed polynomial
    BoundedElement h2 = shifted_x({}, {Scalar(0)});
    DenominatorBounds b2 = bounds_certified(h2);
    REQUIRE(*b2.ddb_exact == 0);
    REQUIRE(*b2.dpb_exact == 0);
    REQUIRE(*b2.frame_den_degree == 0);

    // u = xy is not of the certified shape: only the lower bound applies
    BoundedElement h3(RatFunc2(parse("x*y")), {}, {Scalar(0), Scalar(2)});
    DenominatorBounds b3 = bounds_certified(h3);
    REQUIRE(b3.dpb_lower == 1);
    REQUIRE(!b3.ddb_exact.has_value());

    REQUIRE_THROWS_AS(shifted_x({Scalar(2)}, {Scalar(0), Scalar(2)}), error); // repeated shift
}

TEST_CASE("flags with no polynomial presentation") {
    BoundedElement h = shifted_x({Scalar(1)}, {Scalar(0), Scalar(2)});
    InfiniteFlagCertificate cert = build_infinite_flag(h, t_power(2));
    REQUIRE(cert.flag == parse("(x*y*(x-1)^2)/(x^2*(x-2)^2)"));
    REQUIRE(cert.w_threshold == 1);
    REQUIRE(cert.gamma_cap_degree == 1);

    PoissonField K(cert.flag);
    HeightReport hr = height(K, cert);
    REQUIRE(hr.flag_height == ExtInt::plus_inf());
    REQUIRE(!hr.valuation_height1.has_value()); // not pinned by the certificate

    // a deeper denominator raises the obstruction threshold
    BoundedElement h2 = shifted_x({Scalar(1)}, {Scalar(0), Scalar(2), Scalar(3)});
    InfiniteFlagCertificate cert2 = build_infinite_flag(h2, t_power(3));
    REQUIRE(cert2.w_threshold == 2);

    // w = 0 shapes carry no obstruction and are rejected
    BoundedElement h3 = shifted_x({Scalar(1)}, {Scalar(0)});
    REQUIRE_THROWS_AS(build_infinite_flag(h3, t_power(2)), error);
    // degree below two is rejected
    REQUIRE_THROWS_AS(build_infinite_flag(h, t_power(1)), error);
    // constant h is rejected
    BoundedElement hc(RatFunc2(7), {Scalar(1)}, {Scalar(0), Scalar(2)});
    REQUIRE_THROWS_AS(build_infinite_flag(hc, t_power(2)), error);
}

TEST_CASE("denominator prime-divisor counts for flags") {
    REQUIRE(dpb_upper_for_flag(parse("x^3*y")) == 0);
    REQUIRE(dpb_upper_for_flag(make_factored("x*y*(x+1)*(y+1)*(x+y)")) == 0);
    REQUIRE(dpb_upper_for_flag(make_factored("x^-2*y")) == 1);
    REQUIRE(dpb_upper_for_flag(parse("y/(x^3-2*x^2)")) == 2); // x^2 (x - 2)
    REQUIRE(dpb_upper_for_flag(parse("(x-1)/(x*y)")) == 2);
    REQUIRE_THROWS_AS(dpb_upper_for_flag(parse("1/(x^2+y^2)")), error);
    REQUIRE_THROWS_AS(dpb_upper_for_flag(parse("1/(x^2-2)")), error); // does not split over Q
}

TEST_CASE("the obstruction is consistent with the embedding engines") {
    BoundedElement h = shifted_x({Scalar(1)}, {Scalar(0), Scalar(2)});
    InfiniteFlagCertificate cert = build_infinite_flag(h, t_power(2));
    // polynomial flags all have prime-divisor count 0 < threshold
    for (const char* g : {"1", "2*x*y", "x^3*y", "(x^2-1)*x*y"}) {
        REQUIRE(dpb_upper_for_flag(parse(g)) < cert.w_threshold);
    }
    // and the certified flag never classifies into a canonical (polynomial)
    // type, so no embedding witness into one can be produced from it
    ClassifyResult c = classify_flag(PoissonField(cert.flag));
    REQUIRE(!c.type.resolved());
}
