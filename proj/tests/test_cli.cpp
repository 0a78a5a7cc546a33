#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tvg/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = tvg::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("tvg_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructAndClassify) {
  ASSERT_EQ(run({"construct", "--unipotent", "2", "-o", path("u2.json")}).code, 0);
  const auto r = run({"classify", path("u2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Principal(4,4)\n");

  ASSERT_EQ(run({"construct", "--special", "2", "--times-c2", "1", "-o", path("y.json")}).code, 0);
  EXPECT_EQ(run({"classify", path("y.json")}).out, "Special(2,1)\n");
}

TEST_F(Cli, ConstructToStdout) {
  const auto r = run({"construct", "--principal", "2,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"format_version\": 1"), std::string::npos);
}

TEST_F(Cli, VerifyBrokenIdentity) {
  std::ofstream(path("bad.json")) << R"({"format_version": 1, "identity": "e", "elements": ["e", "x", "s"],
    "table": [[["e","e"], ["x","s"], ["s","s"]],
              [["x","x"], ["e","s"], ["x","x"]],
              [["s","s"], ["x","x"], ["e","e"]]]})";
  const auto r = run({"verify", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("two-valued group: no"), std::string::npos);
  EXPECT_NE(r.out.find("strong-identity: x"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyGood) {
  ASSERT_EQ(run({"construct", "--special", "3", "-o", path("y3.json")}).code, 0);
  const auto r = run({"verify", path("y3.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("involutive: yes"), std::string::npos);
}

TEST_F(Cli, Iso) {
  ASSERT_EQ(run({"construct", "--principal", "4,4", "-o", path("a.json")}).code, 0);
  ASSERT_EQ(run({"construct", "--unipotent", "2", "-o", path("u.json")}).code, 0);
  ASSERT_EQ(run({"construct", "--special", "2", "--times-c2", "1", "-o", path("y.json")}).code, 0);
  EXPECT_EQ(run({"iso", path("a.json"), path("u.json")}).code, 0);
  const auto w = run({"iso", path("a.json"), path("u.json"), "--witness"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("(0,0) -> (0,0,0,0)"), std::string::npos);
  const auto n = run({"iso", path("a.json"), path("y.json")});
  EXPECT_EQ(n.code, 1);
  EXPECT_EQ(n.out, "not isomorphic\n");
}

TEST_F(Cli, Enumerate) {
  const auto r = run({"enumerate", "3", "--involutive-commutative"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("2 groups of size 3\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("Principal(4)"), std::string::npos);
  EXPECT_NE(r.out.find("Principal(5)"), std::string::npos);
  const auto all = run({"enumerate", "3", "--all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("not involutive"), std::string::npos);
}

TEST_F(Cli, Elliptic) {
  const auto r = run({"elliptic", "--params", "0.3+0.1i,1-2i,0.5", "--samples", "50", "--tol", "1e-6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("associative: 50/50"), std::string::npos);
  EXPECT_EQ(run({"elliptic", "--params", "1,2"}).code, 2);
  EXPECT_EQ(run({"elliptic", "--params", "1,2,zz"}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct"}).code, 2);
  EXPECT_EQ(run({"construct", "--unipotent", "2", "--special", "2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "3", "--all", "--involutive-commutative"}).code, 2);
  EXPECT_EQ(run({"enumerate", "x"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_FALSE(run({"verify"}).err.empty());
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, InvalidInputs) {
  EXPECT_EQ(run({"construct", "--principal", "4,6"}).code, 1);
  EXPECT_EQ(run({"construct", "--principal", "4,x"}).code, 1);
  EXPECT_EQ(run({"classify", path("missing.json")}).code, 1);
  ASSERT_EQ(run({"construct", "--principal", "3", "-o", path("c3.json")}).code, 0);
  // doubled C3: valid two-valued group, not involutive
  std::ofstream(path("d3.json")) << R"({"format_version": 1, "identity": "0", "elements": ["0", "1", "2"],
    "table": [[["0","0"], ["1","1"], ["2","2"]],
              [["1","1"], ["2","2"], ["0","0"]],
              [["2","2"], ["0","0"], ["1","1"]]]})";
  EXPECT_EQ(run({"verify", path("d3.json")}).code, 0);
  const auto c = run({"classify", path("d3.json")});
  EXPECT_EQ(c.code, 1);
  EXPECT_FALSE(c.err.empty());
  EXPECT_EQ(run({"iso", path("d3.json"), path("c3.json")}).code, 1);
}
