#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "legcat/json_io.hpp"
#include "test_helpers.hpp"

using namespace legcat;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("variety command") {
  SUBCASE("hopf text output lists the three points") {
    CliResult r = run_cli({"variety", "--field", "2", "--braid", "n=3; w=1,2,1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "(0, 1, 0)\n(0, 1, 1)\n(1, 1, 0)\n3 points\n");
  }
  SUBCASE("trefoil has five points") {
    CliResult r = run_cli({"variety", "--field", "2", "--braid", "n=3; w=1,2,1,2"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("5 points") != std::string::npos);
  }
  SUBCASE("empty word enumerates the empty tuple") {
    CliResult r = run_cli({"variety", "--field", "2", "--braid", "n=2; w="});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "()\n1 point\n");
  }
  SUBCASE("json mode round-trips and encodes the text data") {
    CliResult r = run_cli(
        {"variety", "--field", "2", "--braid", "n=3; w=1,2,1", "--format", "json"});
    CHECK(r.code == cli::kExitOk);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    Field f2 = field_from_json(doc.at("field"));
    CHECK(f2 == Field::prime(2));
    BraidWord w = braid_from_json(doc.at("braid"));
    CHECK(w == BraidWord(3, {1, 2, 1}));
    std::vector<VarietyPoint> pts = points_from_json(f2, doc.at("points"));
    CHECK(pts == enumerate_variety(f2, w));
    CHECK(points_to_json(f2, pts) == doc.at("points"));
  }
  SUBCASE("reduced flag restricts the slice") {
    CliResult all = run_cli({"variety", "--field", "3", "--braid", "n=3; w=1,2,1,2"});
    CliResult red =
        run_cli({"variety", "--field", "3", "--braid", "n=3; w=1,2,1,2", "--reduced"});
    CHECK(all.out.find("40 points") != std::string::npos);
    CHECK(red.out.find("10 reduced points") != std::string::npos);
  }
  SUBCASE("worker count does not change the output") {
    CliResult serial = run_cli({"variety", "--field", "5", "--braid", "n=3; w=1,2,1,2"});
    CliResult threaded = run_cli(
        {"variety", "--field", "5", "--braid", "n=3; w=1,2,1,2", "--threads", "4"});
    CHECK(serial.code == cli::kExitOk);
    CHECK(serial.out == threaded.out);
  }
}

TEST_CASE("exit codes") {
  SUBCASE("parse errors exit 2") {
    CHECK(run_cli({"variety", "--field", "2", "--braid", "garbage"}).code ==
          cli::kExitParse);
    CHECK(run_cli({"variety", "--field", "6", "--braid", "n=2; w=1"}).code ==
          cli::kExitParse);
    CHECK(run_cli({"variety", "--field", "Q", "--braid", "n=2; w=1"}).code ==
          cli::kExitParse);
    CHECK(run_cli({"nonsense"}).code == cli::kExitParse);
  }
  SUBCASE("budget exhaustion exits 3") {
    CliResult r = run_cli({"variety", "--field", "2", "--braid", "n=3; w=1,2,1,2",
                           "--budget", "5"});
    CHECK(r.code == cli::kExitBudget);
  }
  SUBCASE("LEGCAT_BUDGET supplies the default budget") {
    setenv("LEGCAT_BUDGET", "5", 1);
    CliResult starved = run_cli({"variety", "--field", "2", "--braid", "n=3; w=1,2,1,2"});
    CHECK(starved.code == cli::kExitBudget);
    // An explicit flag overrides the environment.
    CliResult flagged = run_cli({"variety", "--field", "2", "--braid", "n=3; w=1,2,1,2",
                                 "--budget", "1000000"});
    CHECK(flagged.code == cli::kExitOk);
    unsetenv("LEGCAT_BUDGET");
  }
  SUBCASE("invalid points exit 4") {
    CliResult r = run_cli({"ext", "--field", "2", "--braid", "n=3; w=1,2,1", "--x",
                           "(0,0,0)", "--y", "(0,1,0)"});
    CHECK(r.code == cli::kExitInvalidPoint);
  }
  SUBCASE("total degree two exits 5") {
    CliResult r = run_cli({"compose", "--field", "2", "--braid", "n=3; w=1,2,1,2",
                           "--px", "(0,1,0,1)", "--py", "(0,1,0,1)", "--pz", "(0,1,0,1)",
                           "--degrees", "1,1", "--b", "1,0", "--a", "0,1"});
    CHECK(r.code == cli::kExitIllegalDegree);
    CHECK(r.err.find("hereditary") != std::string::npos);
  }
  SUBCASE("failing verification exits 1") {
    CHECK(run_cli({"verify", "tables", "--field", "2"}).code == cli::kExitVerifyFailed);
  }
}

TEST_CASE("ext command") {
  SUBCASE("hopf self pair text output") {
    CliResult r = run_cli({"ext", "--field", "2", "--braid", "n=3; w=1,2,1", "--x",
                           "(0,1,0)", "--y", "(0,1,0)"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("ext0 dim: 2") != std::string::npos);
    CHECK(r.out.find("ext0 basis: (0, 1, 0)") != std::string::npos);
    CHECK(r.out.find("ext0 basis: (1, 0, 1)") != std::string::npos);
    CHECK(r.out.find("ext1 dim: 2") != std::string::npos);
    CHECK(r.out.find("complement rows: 1 3") != std::string::npos);
    CHECK(r.out.find("euler characteristic: 0") != std::string::npos);
  }
  SUBCASE("json mode carries the same hom data as text mode") {
    CliResult r = run_cli({"ext", "--field", "2", "--braid", "n=3; w=1,2,1", "--x",
                           "(0,1,0)", "--y", "(0,1,0)", "--format", "json"});
    nlohmann::json doc = nlohmann::json::parse(r.out);
    Field f2 = Field::prime(2);
    const auto& hom = doc.at("homs").at(0);
    CHECK(hom.at("pair") == nlohmann::json({0, 1}));
    CHECK(hom.at("ext1_dim") == 2);
    CHECK(hom.at("complement") == nlohmann::json({1, 3}));
    std::vector<Vec> ext0;
    for (const auto& v : hom.at("ext0")) ext0.push_back(vec_from_json(f2, v));
    BraidWord w(3, {1, 2, 1});
    GradedHom direct(delta_matrix(f2, w, make_vec(f2, {0, 1, 0}), make_vec(f2, {0, 1, 0})));
    CHECK(ext0 == direct.ext0_basis());
  }
  SUBCASE("trefoil distinct points have dims 0 and 1") {
    CliResult r = run_cli({"ext", "--field", "2", "--braid", "n=3; w=1,2,1,2", "--x",
                           "(0,1,0,1)", "--y", "(0,1,1,0)"});
    CHECK(r.out.find("ext0 dim: 0") != std::string::npos);
    CHECK(r.out.find("ext1 dim: 1") != std::string::npos);
  }
  SUBCASE("trivial braid self pair has dims n and 0") {
    CliResult r = run_cli(
        {"ext", "--field", "2", "--braid", "n=3; w=", "--x", "()", "--y", "()"});
    CHECK(r.out.find("ext0 dim: 3") != std::string::npos);
    CHECK(r.out.find("ext1 dim: 0") != std::string::npos);
  }
  SUBCASE("rational points work pointwise") {
    CliResult r = run_cli({"ext", "--field", "Q", "--braid", "n=2; w=1,1,1", "--x",
                           "(1,1,1)", "--y", "(1/2,2,3)"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("euler characteristic: -1") != std::string::npos);
  }
  SUBCASE("rational tuples survive the json round trip") {
    CliResult r = run_cli({"ext", "--field", "Q", "--braid", "n=2; w=1,1,1", "--x",
                           "(1,1,1)", "--y", "(1/2,2,3)", "--format", "json"});
    nlohmann::json doc = nlohmann::json::parse(r.out);
    Field q = field_from_json(doc.at("field"));
    CHECK_FALSE(q.is_prime_field());
    std::vector<VarietyPoint> pts = points_from_json(q, doc.at("points"));
    REQUIRE(pts.size() == 2);
    CHECK(pts[1].coords == Vec{q.fraction(1, 2), q.from_integer(2), q.from_integer(3)});
    CHECK(points_to_json(q, pts) == doc.at("points"));
  }
}

TEST_CASE("compose command") {
  SUBCASE("trefoil scalar action in degree (1,0)") {
    CliResult r = run_cli({"compose", "--field", "2", "--braid", "n=3; w=1,2,1,2",
                           "--px", "(0,1,0,1)", "--py", "(0,1,0,1)", "--pz", "(0,1,1,0)",
                           "--degrees", "1,0", "--b", "1", "--a", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("degree: 1") != std::string::npos);
    CHECK(r.out.find("class coordinates: (1)") != std::string::npos);
  }
  SUBCASE("hopf degree (0,0) composition in kernel coordinates") {
    CliResult r = run_cli({"compose", "--field", "2", "--braid", "n=3; w=1,2,1",
                           "--px", "(1,1,0)", "--py", "(0,1,0)", "--pz", "(0,1,1)",
                           "--degrees", "0,0", "--b", "1", "--a", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("degree: 0") != std::string::npos);
    CHECK(r.out.find("class coordinates: (1)") != std::string::npos);
  }
  SUBCASE("identity composition returns the same coordinates") {
    CliResult r = run_cli({"compose", "--field", "2", "--braid", "n=3; w=1,2,1",
                           "--px", "(0,1,0)", "--py", "(0,1,0)", "--pz", "(0,1,0)",
                           "--degrees", "0,0", "--b", "1,1", "--a", "0,1"});
    CHECK(r.code == cli::kExitOk);
    // (u1 + u2) composed with u2 is u2: the unit absorbs.
    CHECK(r.out.find("class coordinates: (0, 1)") != std::string::npos);
  }
  SUBCASE("coordinate length mismatches exit 2") {
    CliResult r = run_cli({"compose", "--field", "2", "--braid", "n=3; w=1,2,1",
                           "--px", "(0,1,0)", "--py", "(0,1,0)", "--pz", "(0,1,0)",
                           "--degrees", "0,0", "--b", "1", "--a", "0,1"});
    CHECK(r.code == cli::kExitParse);
  }
}

TEST_CASE("verify command") {
  SUBCASE("euler suite on a sampled braid") {
    CliResult r = run_cli({"verify", "euler", "--field", "3", "--braid", "n=3; w=1,2,1,1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("checks passed") != std::string::npos);
  }
  SUBCASE("knot suite on the two-strand trefoil") {
    CliResult r = run_cli({"verify", "knot", "--field", "2", "--braid", "n=2; w=1,1,1"});
    CHECK(r.code == cli::kExitOk);
  }
  SUBCASE("composition laws on the hopf example") {
    CliResult r = run_cli({"verify", "composition-laws", "--field", "2", "--braid",
                           "n=3; w=1,2,1", "--sample", "10", "--seed", "5"});
    CHECK(r.code == cli::kExitOk);
  }
  SUBCASE("tables suite reports exactly the two known divergent rows") {
    CliResult r = run_cli({"verify", "tables", "--field", "2", "--format", "json"});
    CHECK(r.code == cli::kExitVerifyFailed);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    Report report = report_from_json(doc);
    CHECK(report.failure_count() == 2);
    for (const CheckRecord& rec : report.records)
      if (!rec.pass) CHECK(rec.name.find("hopf triple") != std::string::npos);
    // Round trip.
    CHECK(report_to_json(report_from_json(doc)) == doc);
  }
  SUBCASE("unknown suite exits 2") {
    CHECK(run_cli({"verify", "everything", "--field", "2"}).code == cli::kExitParse);
  }
  SUBCASE("enumeration-backed suites reject the rationals") {
    CliResult r =
        run_cli({"verify", "euler", "--field", "Q", "--braid", "n=2; w=1,1"});
    CHECK(r.code == cli::kExitParse);
  }
}

TEST_CASE("json report round trip") {
  Report r{"demo", {{"a", true, ""}, {"b", false, "because"}}};
  nlohmann::json j = report_to_json(r);
  Report back = report_from_json(j);
  CHECK(back.suite == r.suite);
  REQUIRE(back.records.size() == 2);
  CHECK(back.records[1].detail == "because");
  CHECK(report_to_json(back) == j);
}
