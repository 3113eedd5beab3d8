#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"
#include "generators.hpp"

using namespace pfield;

namespace {

struct CliOut {
    int code;
    std::string out, err;
};

CliOut run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: bracket") {
    auto r = run_cli({"bracket", "--flag", "2*x*y", "x^2*y", "x*y^3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "10*x^3*y^4\n"); // (ad-bc) q x^{a+c} y^{b+d}

    auto w = run_cli({"bracket", "--weyl", "--flag", "1", "x", "y"});
    REQUIRE(w.out == "1\n");

    // symbolic coefficients are not part of the grammar
    auto bad = run_cli({"bracket", "--flag", "q*x*y", "x", "y"});
    REQUIRE(bad.code == cli::exit_input_error);
}

TEST_CASE("cli: jacobi and valuation") {
    auto r = run_cli({"jacobi", "--flag", "(x-1)/(y+2)", "x*y", "x/y", "x^2-y"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0\n");

    auto v = run_cli({"valuation", "--zx", "1", "--zy", "2", "x^2+x*y^3", "--flag", "x^3*y"});
    REQUIRE(v.code == 0);
    REQUIRE(v.out.find("nu = 2") != std::string::npos);
}

TEST_CASE("cli: classify and flag-height") {
    auto r = run_cli({"classify", "--flag", "x*y*(y-1)"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("K_q(q=1)") != std::string::npos);
    REQUIRE(r.out.find("[verified]") != std::string::npos);

    auto u = run_cli({"classify", "--flag", "x^2+y^2"});
    REQUIRE(u.code == cli::exit_unsupported);

    auto h = run_cli({"flag-height", "--flag", "x^5*y"});
    REQUIRE(h.code == 0);
    REQUIRE(h.out == "fht=6 vht1=6 witness=(-1,-1)@w=4\n");
}

TEST_CASE("cli: iso routes") {
    auto fac = run_cli({"iso", "--flag", "x*y*(x+y)*(x+2*y)", "--with",
                        "y*(x+y)*(x+2*y)*(x+3*y)"});
    REQUIRE(fac.code == 0);

    auto neg = run_cli({"iso", "--flag", "x*y*(x+y)*(x+2*y)", "--with", "x*y*(x+y)*(x+3*y)"});
    REQUIRE(neg.code == cli::exit_negative);

    auto fam2 = run_cli({"iso", "--flag", "(x^2+x)*x*y", "--with", "(x^2-x)*x*y"});
    REQUIRE(fam2.code == 0);

    auto canon = run_cli({"iso", "--flag", "3*x*y", "--with", "-3*x*y"});
    REQUIRE(canon.code == 0);
    auto canon2 = run_cli({"iso", "--flag", "3*x*y", "--with", "1"});
    REQUIRE(canon2.code == cli::exit_negative);
}

TEST_CASE("cli: aut with JSON output that re-parses") {
    auto r = run_cli({"aut", "--flag", "x*y*(x^2-1)*(y^2-1)", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["order"] == 4);
    REQUIRE(j["group_axioms_ok"] == true);
    for (const auto& m : j["maps"]) {
        REQUIRE_NOTHROW(parse(m["x"].get<std::string>()));
        REQUIRE_NOTHROW(parse(m["y"].get<std::string>()));
    }

    auto fam1 = run_cli({"aut", "--flag", "x^4*y"});
    REQUIRE(fam1.code == 0);
    REQUIRE(fam1.out.find("right-split") != std::string::npos); // n = 3 is odd
    REQUIRE(fam1.out.find("not right-split") == std::string::npos);

    auto weyl = run_cli({"aut", "--flag", "1"});
    REQUIRE(weyl.code == cli::exit_unsupported); // open problem, not guessed
}

TEST_CASE("cli: embed exit codes") {
    auto yes = run_cli({"embed", "--from", "6*x*y", "--to", "2*x*y"});
    REQUIRE(yes.code == 0);
    REQUIRE(yes.out.find("[verified]") != std::string::npos);
    auto no = run_cli({"embed", "--from", "x*y", "--to", "2*x*y"});
    REQUIRE(no.code == cli::exit_negative);
}

TEST_CASE("cli: logderiv") {
    auto s = run_cli({"logderiv", "1/2*t*(t-1)*(t+1)"});
    REQUIRE(s.code == 0);
    REQUIRE(s.out.find("(t - (0))^-2") != std::string::npos);

    auto none = run_cli({"logderiv", "t*(t-1)*(t-3)"});
    REQUIRE(none.code == cli::exit_negative);

    auto res = run_cli({"logderiv", "--residues", "t^-2*(t-1)*(t+1)"});
    REQUIRE(res.code == 0);
    REQUIRE(res.out.find("(0, -2)") != std::string::npos);

    auto cond = run_cli({"logderiv", "--conditions", "t*(t-1)*(t-2)"});
    REQUIRE(cond.code == 0);
    REQUIRE(cond.out.find("sum_zero=true moment_zero=true") != std::string::npos);
}

TEST_CASE("cli: denominator bounds and the infinite flag") {
    auto b = run_cli({"ddb", "--u", "x", "--num-shifts", "1", "--den-shifts", "0,2"});
    REQUIRE(b.code == 0);
    REQUIRE(b.out == "ddb=1 dpb=1 fdb=1\n");

    auto c = run_cli({"build-infinite-flag", "--u", "x", "--num-shifts", "1", "--den-shifts",
                      "0,2", "--poly", "t^2"});
    REQUIRE(c.code == 0);
    REQUIRE(c.out.find("fht=inf") != std::string::npos);
}

TEST_CASE("cli: dixmier, flabby, subfield-witness") {
    REQUIRE(run_cli({"dixmier", "--flag", "(x^2-1)*x*y"}).code == 0);
    auto no = run_cli({"dixmier", "--flag", "x^3*y"});
    REQUIRE(no.code == cli::exit_negative);
    REQUIRE(no.out.find("[verified]") != std::string::npos);
    REQUIRE(run_cli({"dixmier", "--flag", "x^2+y^3"}).code == cli::exit_unsupported);

    REQUIRE(run_cli({"flabby", "--flag", "x*y*(x+y)*(x+2*y)"}).code == 0);
    REQUIRE(run_cli({"flabby", "--flag", "x*y*(x+1)"}).code == cli::exit_negative);
    REQUIRE(run_cli({"flabby", "--flag", "x^2+y^2"}).code == cli::exit_input_error);

    auto w = run_cli({"subfield-witness", "--kind", "weyl-from-x", "--f", "x^3"});
    REQUIRE(w.code == 0);
    REQUIRE(w.out.find("[verified]") != std::string::npos);
    auto cub = run_cli({"subfield-witness", "--kind", "cubic", "--a1", "1", "--a2", "3",
                        "--s1", "3", "--s2", "-1"});
    REQUIRE(cub.code == 0);
    REQUIRE(cub.out.find("-6*x*y") != std::string::npos);
}

TEST_CASE("cli: identical invocations produce identical bytes") {
    std::vector<std::string> cmd{"aut", "--flag", "x*y*(x^2-1)*(y^2-1)", "--json"};
    auto a = run_cli(cmd), b = run_cli(cmd);
    REQUIRE(a.out == b.out);
    std::vector<std::string> cmd2{"classify", "--flag", "8*x^4*y", "--json"};
    REQUIRE(run_cli(cmd2).out == run_cli(cmd2).out);
}

TEST_CASE("cli: qt mode") {
    auto r = run_cli({"--mode", "qt", "bracket", "--flag", "t*x*y", "x", "y"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "t*x*y\n");
    auto q = run_cli({"bracket", "--flag", "t*x*y", "x", "y"}); // t needs qt mode
    REQUIRE(q.code == cli::exit_input_error);
}
