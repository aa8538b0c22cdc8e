#include <catch_amalgamated.hpp>

#include <cstdio>

#include "cli_runner.hpp"
#include "rhiza/io.hpp"

using namespace rhiza;
using namespace rhiza::testsupport;

namespace {
Json report_of(const CliResult& res) {
    Json j = Json::parse(res.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    return j;
}
} // namespace

TEST_CASE("check command: outcomes and witnesses") {
    CliResult ok = run_cli({"check", fixture("rh1.json"), "--axiom=rhizaform"});
    CHECK(ok.exit_code == 0);
    Json rep = report_of(ok);
    CHECK(rep["pass"] == true);
    CHECK(rep["violations"].empty());

    CliResult bad = run_cli({"check", fixture("alg_idem.json"), "--axiom=jacobi-jordan"});
    CHECK(bad.exit_code == 1);
    Json rep2 = report_of(bad);
    CHECK(rep2["pass"] == false);
    REQUIRE_FALSE(rep2["violations"].empty());
    CHECK(rep2["violations"][0].contains("axiom"));
    CHECK(rep2["violations"][0].contains("indices"));
    CHECK(rep2["violations"][0].contains("residual"));

    CHECK(run_cli({"check", fixture("missing.json"), "--axiom=rhizaform"}).exit_code == 2);
}

TEST_CASE("derive writes canonical output files") {
    std::string out = std::string(RHIZA_FIXTURES_DIR) + "/../tmp_derive_out.json";
    CliResult res = run_cli({"derive", fixture("rh1.json"), "--op=sum", "-o", out});
    REQUIRE(res.exit_code == 0);
    AlgebraDocument doc = parse_algebra(out);
    CHECK(doc.algebra().mul.c(0, 0, 1) == Scalar(1));
    Json rep = report_of(res);
    CHECK(rep["derived"]["algebra"]["kind"] == "algebra");
    std::remove(out.c_str());
}

TEST_CASE("rb search reports matrices in deterministic order") {
    CliResult res = run_cli({"rb", "search", fixture("alg2.json"), "--height=1"});
    REQUIRE(res.exit_code == 0);
    Json rep = report_of(res);
    int count = rep["derived"]["count"].get<int>();
    CHECK(count == static_cast<int>(rep["derived"]["matrices"].size()));
    CHECK(count > 0);
    CliResult res2 = run_cli({"rb", "search", fixture("alg2.json"), "--height=1"});
    CHECK(res.out == res2.out);
}

TEST_CASE("series command reports terms and nilindex") {
    CliResult res = run_cli({"series", fixture("rh1.json"), "--kind=right", "--max=5"});
    REQUIRE(res.exit_code == 0);
    Json rep = report_of(res);
    CHECK(rep["derived"]["nilindex"] == 3);
    CHECK(rep["derived"]["terms"].size() == 3);
}

TEST_CASE("canon2 and iso2 commands") {
    CliResult res = run_cli({"canon2", fixture("rh2_2.json")});
    REQUIRE(res.exit_code == 0);
    Json rep = report_of(res);
    CHECK(rep["derived"]["tag"] == "Rh2");
    CHECK(rep["derived"]["lambda"] == "2");

    CliResult sep = run_cli({"iso2", fixture("rh2_1.json"), fixture("rh2_half.json")});
    CHECK(sep.exit_code == 1);
    CHECK(report_of(sep)["derived"]["distinguishing_invariant"] == "lambda");
}

TEST_CASE("double-construct records the verified candidate") {
    CliResult res = run_cli({"double-construct", fixture("rh1.json")});
    REQUIRE(res.exit_code == 0);
    Json rep = report_of(res);
    CHECK(rep["derived"]["witness"]["candidate"] == "dual+antisymmetric");
}

TEST_CASE("classify2 honors RHIZA_FIELD and rejects bad values") {
    CliResult q = run_cli({"classify2"});
    REQUIRE(q.exit_code == 0);
    CHECK(report_of(q)["derived"]["field"] == "Q");
    CliResult qi = run_cli({"classify2"}, "RHIZA_FIELD=Qi ");
    REQUIRE(qi.exit_code == 0);
    CHECK(report_of(qi)["derived"]["field"] == "Qi");
    CHECK(run_cli({"classify2"}, "RHIZA_FIELD=R ").exit_code == 2);
}
