#include <gtest/gtest.h>

#include "coxkit/cli.hpp"

using namespace coxkit;

namespace {

std::string data(const std::string& name) { return std::string(COXKIT_DATA_DIR) + "/" + name; }

CommandResult run(std::vector<std::string> args) { return run_cli(args); }

}  // namespace

TEST(Cli, DocumentedExamples) {
  auto r = run({"classify", data("b3.cox")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.text, "B3 (order 48)");

  r = run({"isomorphic", data("b3.cox"), data("a1_a3.cox")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.text, "YES");

  r = run({"core", data("a2.cox"), "--subset", "s1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.text, "case (iii): Z(W), order 1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"isomorphic", "B3", "A1,A2"}).exit_code, kExitNegative);
  EXPECT_EQ(run({"center-factor", data("a2.cox")}).exit_code, kExitNegative);
  EXPECT_EQ(run({"center-factor", data("b3.cox")}).exit_code, kExitOk);
  EXPECT_EQ(run({"indecomposable", data("a1_a3.cox")}).exit_code, kExitNegative);
  EXPECT_EQ(run({"indecomposable", data("a2.cox")}).exit_code, kExitOk);
  EXPECT_EQ(run({"frobnicate"}).exit_code, kExitError);
  EXPECT_EQ(run({"classify", data("missing.cox")}).exit_code, kExitError);
  EXPECT_EQ(run({"classify", data("b3.cox"), "--bogus"}).exit_code, kExitError);
  EXPECT_EQ(run({"core", data("b3.cox"), "--subset", "x9"}).exit_code, kExitError);
  EXPECT_EQ(run({"--cap", "10", "order", data("b3.cox"), "--verify"}).exit_code, kExitError);
  EXPECT_EQ(run({"richardson", data("b3.cox"), "--element", "s1 s2"}).exit_code, kExitError);
  EXPECT_EQ(run({"--help"}).exit_code, kExitOk);
}

TEST(Cli, VerifyNeverChangesTheAnswer) {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", data("a1_a3.cox")},
      {"order", data("b3.cox")},
      {"longest", data("b3.cox"), "--subset", "s2,s3"},
      {"deodhar", data("b3.cox")},
      {"center-factor", data("b3.cox")},
      {"center-factor", data("a2.cox")},
      {"indecomposable", data("b3.cox")},
      {"core", data("b3.cox"), "--subset", "s1,s2"},
      {"core", data("b3.cox"), "--subset", "s2"},
      {"centralizer", data("b3.cox"), "--involution", "s1"},
      {"centralizer", data("b3.cox"), "--involution", "s3"},
      {"richardson", data("b3.cox"), "--element", "s3 s2 s3"},
      {"isomorphic", data("b3.cox"), data("a1_a3.cox")},
      {"isomorphic", "B5", "A1,D5"},
      {"isomorphic", "A1,A1", "B2"},
      {"aut", data("a1_a3.cox")},
      {"aut-order", "--sym", "0,2"},
  };
  for (auto args : commands) {
    args.push_back("--json");
    auto plain = run(args);
    args.push_back("--verify");
    auto checked = run(args);
    ASSERT_TRUE(plain.json && checked.json) << args[0];
    EXPECT_EQ(plain.exit_code, checked.exit_code) << args[0];
    auto a = *plain.json, b = *checked.json;
    b.erase("witness");
    EXPECT_EQ(a, b) << args[0];
  }
}

TEST(Cli, JsonSchema) {
  auto r = run({"classify", data("a1_a3.cox"), "--json"});
  ASSERT_TRUE(r.json);
  EXPECT_EQ((*r.json)["components"], nlohmann::json({"A1", "A3"}));
  EXPECT_EQ((*r.json)["order"], "48");
  EXPECT_EQ(nlohmann::json::parse(r.text), *r.json);

  r = run({"core", data("b3.cox"), "--subset", "s1", "--json", "--elements"});
  ASSERT_TRUE(r.json);
  EXPECT_EQ((*r.json)["case"], "(i)");
  EXPECT_EQ((*r.json)["subgroup_order"], 8);
  EXPECT_EQ((*r.json)["element_ids"].size(), 8u);

  r = run({"isomorphic", "A1,Ainf", "Ainf,A1", "--json"});
  ASSERT_TRUE(r.json);
  EXPECT_EQ((*r.json)["verdict"], "YES");

  r = run({"roots", data("a2.cox"), "--json"});
  ASSERT_TRUE(r.json);
  EXPECT_EQ((*r.json)["positive"], 3);
  EXPECT_EQ((*r.json)["roots"].size(), 6u);

  r = run({"classify", data("missing.cox"), "--json"});
  EXPECT_EQ(r.exit_code, kExitError);
  ASSERT_TRUE(r.json);
  EXPECT_TRUE(r.json->contains("error"));
}

TEST(Cli, TextFormats) {
  auto r = run({"roots", data("a2.cox")});
  EXPECT_EQ(r.text, "0: 1 0\n1: 0 1\n2: 1 1\n3: -1 0\n4: 0 -1\n5: -1 -1");

  r = run({"deodhar", data("b3.cox")});
  EXPECT_NE(r.text.find("sequence: [s1,s2] [s1] []"), std::string::npos) << r.text;

  r = run({"aut-order", "--sym", "0,1,1"});
  EXPECT_EQ(r.text, "12");
  r = run({"aut-order", "--sym", "0,0,0,1"});
  EXPECT_EQ(r.text, "24");
  r = run({"aut-order", "--sym", "0,2"});
  EXPECT_EQ(r.text, "6");

  r = run({"aut", data("b3.cox")});
  EXPECT_EQ(r.text.substr(0, 14), "|Aut(W)| = 48\n");
}

TEST(Cli, VerifySuite) {
  auto r = run({"verify", "--suite", "orders"});
  EXPECT_EQ(r.exit_code, 0) << r.text;
  EXPECT_NE(r.text.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).exit_code, kExitError);
}
