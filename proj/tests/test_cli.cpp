#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "csplab/cli.hpp"
#include "csplab/registry.hpp"
#include "csplab/report.hpp"

using namespace csplab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyMultiset) {
  const auto r = run({"verify", "multiset", "--n", "3", "--k", "2"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("f(q) = 1+q+2q^2+q^3+q^4"), std::string::npos);
  EXPECT_NE(r.out.find("evals = (6,0,0)"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
}

TEST(Cli, VerifyTrivialAndEqualsSyntax) {
  EXPECT_EQ(run({"verify", "ncp", "--n", "1"}).code, kPass);
  EXPECT_EQ(run({"verify", "ncp", "--n=4", "--checker", "roots"}).code, kPass);
}

TEST(Cli, CorruptedCoefficientFails) {
  const auto r = run({"verify", "multiset", "--n", "3", "--k", "2", "--corrupt-coeff", "2"});
  EXPECT_EQ(r.code, kMismatch);
  EXPECT_NE(r.out.find("NO"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: FAIL"), std::string::npos);
  for (const char* checker : {"roots", "orbits"}) {
    EXPECT_EQ(run({"verify", "multiset", "--n", "3", "--k", "2", "--corrupt-coeff", "2", "--checker", checker}).code,
              kMismatch);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "nosuch"}).code, kUsage);
  EXPECT_EQ(run({"verify", "multiset", "--n", "3"}).code, kUsage);
  EXPECT_EQ(run({"verify", "multiset", "--n", "3", "--k"}).code, kUsage);
  EXPECT_EQ(run({"verify", "multiset", "--n", "3", "--k", "2", "--checker", "all"}).code, kUsage);
  EXPECT_EQ(run({"verify", "subset", "--n", "5", "--k", "2", "--gen", "(1,2,4)(3,5)"}).code, kUsage);
  EXPECT_EQ(run({"verify", "syt_rect", "--m", "4", "--n", "4", "--cap", "1000"}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"poly", "nosuch", "1"}).code, kUsage);
  EXPECT_EQ(run({"poly", "qbinom", "4"}).code, kUsage);
}

TEST(Cli, EnvironmentCap) {
  ::setenv("CSP_LAB_CAP", "3", 1);
  EXPECT_EQ(run({"verify", "multiset", "--n", "3", "--k", "2"}).code, kUsage);
  EXPECT_EQ(run({"verify", "multiset", "--n", "3", "--k", "2", "--cap", "10"}).code, kPass);
  ::setenv("CSP_LAB_CAP", "zero", 1);
  EXPECT_EQ(run({"verify", "multiset", "--n", "3", "--k", "2"}).code, kUsage);
  ::unsetenv("CSP_LAB_CAP");
}

TEST(Cli, Poly) {
  EXPECT_EQ(run({"poly", "qbinom", "4", "2"}).out.substr(0, 17), "1+q+2q^2+q^3+q^4\n");
  EXPECT_EQ(run({"poly", "eulerian", "4"}).out.substr(0, 16), "1+11q+11q^2+q^3\n");
  const auto c = run({"poly", "qcatalan", "0"});
  EXPECT_EQ(c.code, kPass);
  EXPECT_EQ(c.out, "1\ncoefficients: [1]\nf(1) = 1\n");
  EXPECT_NE(run({"poly", "qbinom", "4", "2"}).out.find("f(1) = 6"), std::string::npos);
  EXPECT_EQ(run({"poly", "qsyt", "3,3"}).out.substr(0, 18), "1+q^2+q^3+q^4+q^6\n");
}

TEST(Cli, List) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, kPass);
  for (const auto& f : family_catalogue()) EXPECT_NE(r.out.find(f.id), std::string::npos);
}

TEST(Cli, Orbits) {
  const auto ms = run({"orbits", "multiset", "--n", "3", "--k", "2"});
  EXPECT_EQ(ms.code, kPass);
  EXPECT_NE(ms.out.find("(11; 22; 33)"), std::string::npos);
  EXPECT_NE(ms.out.find("(12; 23; 13)"), std::string::npos);
  EXPECT_NE(ms.out.find("a = (2,2,2)"), std::string::npos);

  const auto syt = run({"orbits", "syt_rect", "--m", "2", "--n", "3"});
  EXPECT_NE(syt.out.find("(123/456; 125/346; 134/256)"), std::string::npos);
  EXPECT_NE(syt.out.find("(124/356; 135/246)"), std::string::npos);

  const auto sub = run({"orbits", "subset", "--n", "4", "--k", "2", "--json"});
  const auto j = nlohmann::json::parse(sub.out);
  std::vector<std::size_t> sizes;
  for (const auto& o : j["orbits"]) sizes.push_back(o["size"].get<std::size_t>());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(j["a"], nlohmann::json::parse("[2,1,2,1]"));
}

TEST(Cli, JsonReportSchema) {
  const auto r = run({"verify", "multiset", "--n", "3", "--k", "2", "--json"});
  EXPECT_EQ(r.code, kPass);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"family", "params", "size", "order", "rows", "orbits", "a", "verdict"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["family"], "multiset");
  EXPECT_EQ(j["params"]["n"], "3");
  EXPECT_EQ(j["size"], 6);
  EXPECT_EQ(j["order"], 3);
  ASSERT_EQ(j["rows"].size(), 3U);
  for (const char* key : {"j", "elem_order", "fixed", "eval", "match"}) EXPECT_TRUE(j["rows"][0].contains(key));
  EXPECT_EQ(j["rows"][0]["eval"], 6);
  EXPECT_EQ(j["orbits"][0]["size"], 3);
  EXPECT_EQ(j["orbits"][0]["stab"], 1);
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Cli, TextAndJsonVerdictsAgree) {
  const std::vector<std::vector<std::string>> configs = {
      {"multiset", "--n", "3", "--k", "2"},
      {"multiset", "--n", "3", "--k", "2", "--corrupt-coeff", "1"},
      {"syt_rect", "--m", "2", "--n", "3", "--checker", "orbits"},
      {"triangulation", "--n", "3"},
  };
  for (const auto& cfg : configs) {
    std::vector<std::string> text{"verify"};
    text.insert(text.end(), cfg.begin(), cfg.end());
    std::vector<std::string> json = text;
    json.push_back("--json");
    const auto t = run(text);
    const auto j = run(json);
    EXPECT_EQ(t.code, j.code);
    const bool text_pass = t.out.find("verdict: PASS") != std::string::npos;
    EXPECT_EQ(text_pass, nlohmann::json::parse(j.out)["verdict"] == "pass");
  }
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "csp_lab_report_test.json").string();
  const auto r = run({"verify", "ncm", "--n", "3", "--json", "--out", path});
  EXPECT_EQ(r.code, kPass);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["size"], 5);
  std::filesystem::remove(path);
}

TEST(Report, JsonRoundTrip) {
  for (const auto& inst : {multiset_instance(3, 2), syt_rect_instance(2, 3), ncp_instance(4)}) {
    const auto rep = run_checks(inst);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(report_to_json(rep).dump())), rep);
  }
  auto bad = cycle_instance(3);
  bad.polynomial = IntPolynomial({0, 0, 3});
  const auto rep = run_checks(bad);
  EXPECT_FALSE(rep.rows[1].eval.has_value());
  const auto j = report_to_json(rep);
  EXPECT_TRUE(j["rows"][1]["eval"].is_null());
  EXPECT_EQ(report_from_json(j), rep);
}

TEST(Report, LargeIntegersBecomeStrings) {
  Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_TRUE(integer_to_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(integer_from_json(integer_to_json(Integer(-5))), -5);
}

TEST(Report, MalformedJsonRejected) {
  EXPECT_THROW(report_from_json(nlohmann::json::parse("[]")), PreconditionViolation);
  auto j = report_to_json(run_checks(cycle_instance(2)));
  j.erase("rows");
  EXPECT_THROW(report_from_json(j), PreconditionViolation);
}
