#include <gtest/gtest.h>

#include "json.hpp"
#include "hcomm/cli.hpp"

namespace hcomm {
namespace {

using Json = nlohmann::ordered_json;

Json run_json(const std::vector<std::string>& args, int expected_exit = kExitOk) {
  const CliResult r = run_cli(args);
  EXPECT_EQ(r.exit_code, expected_exit) << r.out << r.err;
  return Json::parse(r.out);
}

TEST(Cli, CountDihedral) {
  const Json doc = run_json({"count", "--group", "dihedral(6)", "--r", "4"});
  EXPECT_EQ(doc["group"], "dihedral(6)");
  EXPECT_EQ(doc["order"], 12);
  EXPECT_EQ(doc["hom"], "2016");
}

TEST(Cli, CountRoutesAgree) {
  for (const std::string route : {"recursion", "bruteforce", "split"}) {
    const Json doc = run_json({"count", "--group", "dihedral(5)", "--r-range", "0..4", "--route", route});
    ASSERT_EQ(doc["values"].size(), 5u) << route;
    // hom(2) = |G| k(G) = 10 * 4
    EXPECT_EQ(doc["values"][0]["hom"], "1");
    EXPECT_EQ(doc["values"][1]["hom"], "10");
    EXPECT_EQ(doc["values"][2]["hom"], "40");
  }
  const Json cyc = run_json({"count", "--group", "semidirect(cyclic(7); cyclic(3); [[2]])", "--r", "3", "--route",
                             "cyclic"});
  const Json rec = run_json({"count", "--group", "semidirect(cyclic(7); cyclic(3); [[2]])", "--r", "3"});
  EXPECT_EQ(cyc["hom"], rec["hom"]);
}

TEST(Cli, SpectrumSymmetric3) {
  const Json doc = run_json({"spectrum", "--group", "symmetric(3)"});
  EXPECT_EQ(doc["spectrum"], Json::parse(R"([{"m":2,"c":1},{"m":3,"c":3},{"m":6,"c":-3}])"));
  EXPECT_EQ(doc["m_star"], 2);
  EXPECT_EQ(doc["pole_coeff"], "1/2");
  const Json strata = run_json({"spectrum", "--group", "symmetric(3)", "--route", "strata"}, kExitInput);
  EXPECT_EQ(strata["error"], "InvalidArgument");
  const Json d3 = run_json({"spectrum", "--group", "dihedral(3)", "--route", "strata"});
  EXPECT_EQ(d3["spectrum"], doc["spectrum"]);
}

TEST(Cli, ProbAbelianIsOne) {
  const Json doc = run_json({"prob", "--group", "cyclic(5)", "--r", "9"});
  EXPECT_EQ(doc["P_r"], "1");
}

TEST(Cli, SeriesAbelianIsSymbolic) {
  const Json doc = run_json({"series", "--group", "cyclic(6)", "--z", "1/3"});
  EXPECT_EQ(doc["series"], "1/(1-z)");
  EXPECT_EQ(doc["value"], "3/2");
  const Json pole = run_json({"series", "--group", "cyclic(6)", "--z", "1"}, kExitInput);
  EXPECT_EQ(pole["error"], "PoleHit");
}

TEST(Cli, SeriesQuaternion) {
  const Json doc = run_json({"series", "--group", "quaternion8"});
  EXPECT_EQ(doc["Sigma"], "4/3");
  EXPECT_EQ(doc["pole_coeff"], "3/2");
  EXPECT_EQ(doc["sigma"], Json::parse(R"(["3/4","1/8"])"));
}

TEST(Cli, InvertFromFourValues) {
  const Json doc = run_json({"invert", "--values", "5/8,11/32,23/128,47/512"});
  EXPECT_EQ(doc["spectrum"], Json::parse(R"([{"m":2,"c":3},{"m":4,"c":-2}])"));
  const Json short_input = run_json({"invert", "--values", "5/8,11/32"}, kExitInput);
  EXPECT_EQ(short_input["error"], "NotEnoughData");
}

TEST(Cli, VerifyStatedCongruenceIsDocumentedFailure) {
  const Json doc = run_json({"verify", "--check", "pgroup-congruence-stated"});
  ASSERT_EQ(doc["checks"].size(), 1u);
  const Json& check = doc["checks"][0];
  EXPECT_EQ(check["expected"], "fail");
  EXPECT_TRUE(check["ok"].get<bool>());
  bool found = false;
  for (const auto& row : check["rows"]) {
    if (row["group"] == "quaternion8" && row["params"] == "r=1") {
      found = true;
      EXPECT_EQ(row["status"], "fail");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifySpectralIdentity) {
  const Json doc = run_json({"verify", "--check", "spectral-identity", "--max-r", "12"});
  EXPECT_TRUE(doc["ok"].get<bool>());
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args{"verify", "--format", "csv"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvHasHeaderAndOneRowPerValue) {
  const CliResult r = run_cli({"prob", "--group", "quaternion8", "--r-range", "2..4", "--format", "csv"});
  EXPECT_EQ(r.out,
            "group,order,r,P_r\n"
            "quaternion8,8,2,5/8\n"
            "quaternion8,8,3,11/32\n"
            "quaternion8,8,4,23/128\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, kExitInput);
  EXPECT_EQ(run_cli({"count", "--group", "cyclic(0)", "--r", "2"}).exit_code, kExitInput);
  EXPECT_EQ(run_cli({"prob", "--group", "cyclic(3)", "--r", "0"}).exit_code, kExitInput);
  EXPECT_EQ(run_cli({"spectrum", "--group", "cyclic(3)"}).exit_code, kExitInput);
  EXPECT_EQ(run_cli({"count", "--group", "symmetric(4)", "--r", "12", "--route", "bruteforce"}).exit_code, kExitCap);
  EXPECT_EQ(run_cli({"stats", "--group", "cyclic(4096)", "--lattice-cap", "100"}).exit_code, kExitCap);
  EXPECT_EQ(run_cli({"verify", "--check", "no-such-check"}).exit_code, kExitInput);
  EXPECT_EQ(run_cli({"--help"}).exit_code, kExitOk);
  EXPECT_EQ(exit_code_for(ErrorCode::FormulaMismatch), kExitInternal);
  EXPECT_EQ(exit_code_for(ErrorCode::OrderCap), kExitCap);
}

}  // namespace
}  // namespace hcomm
