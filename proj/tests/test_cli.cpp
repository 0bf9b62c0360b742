#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "upk/cli.hpp"

namespace upk {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "upk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("upk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, RunAtup) {
  auto r = run({"run", "--alg", "atup", "--ahat", "0.02", "--input", write("s.txt", "0.1\n")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("profit=1 "), std::string::npos) << r.out;
}

TEST_F(CliTest, RunOptJson) {
  auto path = write("s.txt", "0.5\n0.2\n0.4\n0.3\n");
  auto r = run({"run", "--alg", "opt", "--input", path, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["profit"], 3);
}

TEST_F(CliTest, RunErrors) {
  EXPECT_EQ(run({"run", "--alg", "at", "--input", "/nonexistent"}).code, kExitInput);
  EXPECT_EQ(run({"run", "--alg", "at", "--input", write("bad.txt", "0.5\nx\n")}).code,
            kExitInput);
  EXPECT_EQ(run({"run", "--alg", "at", "--input", write("s.txt", "0.5\n")}).code, kExitFlags);
  EXPECT_EQ(run({"run", "--alg", "bogus", "--input", "x"}).code, kExitFlags);
  EXPECT_EQ(run({}).code, kExitFlags);
}

TEST_F(CliTest, AdversaryTrustedJson) {
  auto r = run({"adversary", "--kind", "trusted", "--a", "0.01", "--alg", "at"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("case"));
  EXPECT_LE(j["ratio"].get<double>(), 0.6321 + 0.05);
  for (const char* key : {"n", "alg_profit", "opt_profit", "true_a"}) EXPECT_TRUE(j.contains(key));
}

TEST_F(CliTest, AdversaryTradeoffAndDump) {
  auto dump = (dir_ / "seq.txt").string();
  auto r = run({"adversary", "--kind", "tradeoff", "--z", "2", "--q", "0.5", "--b", "2",
                "--ahat", "0.001", "--alg", "atup", "--dump-sequence", dump});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["case"], "small-items");
  auto back = run({"run", "--alg", "opt", "--input", dump, "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(back.out)["n"], j["n"]);
}

TEST_F(CliTest, AdversaryPreconditionMessage) {
  auto r = run({"adversary", "--kind", "trusted", "--a", "0.3", "--alg", "at"});
  EXPECT_EQ(r.code, kExitFlags);
  EXPECT_NE(r.err.find("requires a < 1/(2e)"), std::string::npos) << r.err;
}

TEST_F(CliTest, SweepPassesAndIsReproducible) {
  std::vector<std::string> args = {"sweep", "--alg",    "atup", "--ahat", "0.005", "--r",
                                   "0.25,0.5,1,2,4", "--trials", "50", "--seed", "7"};
  auto a = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "r,alg,trials,mean_alg_profit,mean_opt_profit,min_empirical_ratio,"
            "theoretical_bound,additive_slack,pass");
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 6);
  args.push_back("--serial");
  EXPECT_EQ(run(args).out, a.out);
}

TEST_F(CliTest, SweepZeroBoundAndDuplicates) {
  auto r = run({"sweep", "--alg", "at", "--ahat", "0.005", "--r", "3,3", "--trials", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("duplicate"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_NE(r.out.find(",0,"), std::string::npos);
}

TEST_F(CliTest, SweepJsonAndOutputFile) {
  auto path = (dir_ / "out.json").string();
  auto r = run({"sweep", "--alg", "atup", "--r", "1", "--trials", "3", "--format", "json",
                "--output", path});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["alg"], "atup");
  EXPECT_EQ(j[0]["pass"], true);
}

TEST_F(CliTest, SweepBadFlags) {
  EXPECT_EQ(run({"sweep", "--alg", "atup", "--r", "-1"}).code, kExitFlags);
  EXPECT_EQ(run({"sweep", "--alg", "atup", "--r", "1", "--trials", "0"}).code, kExitFlags);
  EXPECT_EQ(run({"sweep", "--alg", "atup", "--r", "1", "--format", "xml"}).code, kExitFlags);
}

TEST_F(CliTest, AdviceEncodeFrameDecode) {
  auto e = run({"advice", "encode", "--a", "0.3", "--k", "3"});
  EXPECT_EQ(e.code, kExitOk);
  EXPECT_EQ(e.out.substr(0, e.out.find(" frame=")), "z=1 s=100 ahat=0.25 r=1.2");

  auto f = run({"advice", "frame", "--z", "1", "--s", "101"});
  EXPECT_EQ(f.code, kExitOk);
  const std::string bits = f.out.substr(0, f.out.find('\n'));
  EXPECT_LE(bits.size(), 10u);

  auto d = run({"advice", "decode", "--frame", bits});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_NE(d.out.find("z=1 s=101"), std::string::npos);

  EXPECT_EQ(run({"advice", "decode", "--frame", "10111"}).code, kExitInput);
  EXPECT_EQ(run({"advice", "encode", "--a", "1.5"}).code, kExitFlags);
}

TEST_F(CliTest, AdviceRun) {
  auto path = write("s.txt", "0.1\n0.1\n");
  auto r = run({"advice", "run", "--frame", "0110" "11", "--input", path, "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("0.75,"), std::string::npos);
}

TEST_F(CliTest, Selfcheck) {
  EXPECT_EQ(run({"selfcheck", "--quick"}).code, kExitOk);
  auto bad = run({"selfcheck", "--quick", "--inject-fault"});
  EXPECT_EQ(bad.code, kExitBoundViolation);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace upk
