#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "erasurelab/io.hpp"
#include "support.hpp"

using namespace erasurelab;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("erasurelab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

const std::filesystem::path kGolden = ERASURELAB_GOLDEN_DIR;

}  // namespace

TEST_F(CliTest, ConstructConstructionOneGolden) {
  const auto r = run({"construct", "--scheme", "c1", "--n", "8", "--b1", "3", "--b2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden / "construct_c1_8_3_1.json"));
  EXPECT_EQ(r.doc().at("result").at("code").at("H").at("data"),
            json::parse("[[1,0,0,1,0,0,1,0],[0,1,0,0,1,0,0,1],[0,0,1,0,0,1,0,0],[0,0,0,1,1,1,2,2]]"));
}

TEST_F(CliTest, ConstructBinaryTableGolden) {
  const auto r = run({"--format", "table", "construct", "--scheme", "c1bin", "--n", "8", "--b1", "3", "--b2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden / "construct_c1bin_8_3_1.txt"));
}

TEST_F(CliTest, ConstructWritesCodeFile) {
  const auto file = path("mds.json");
  const auto r = run({"construct", "--scheme", "mds", "--n", "6", "--r", "4", "--out", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::read_code_file(file), mds_code(6, 4));
  EXPECT_EQ(r.doc().at("config").at("out"), file);
}

TEST_F(CliTest, ConstructCyclic) {
  const auto r = run({"construct", "--scheme", "cyclic", "--n", "7", "--q", "2", "--h", "1,0,1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("result").at("code").at("k"), 4);
  EXPECT_EQ(r.doc().at("result").at("code").at("provenance").at("scheme"), "cyclic");
}

TEST_F(CliTest, ConstructErrors) {
  const auto r = run({"construct", "--scheme", "c1", "--n", "8", "--b1", "3", "--b2", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.error().at("error").at("kind"), "DivisibilityViolation");

  EXPECT_EQ(run({"construct", "--scheme", "c1", "--n", "8", "--b1", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "--scheme", "rs", "--n", "8"}).code, 2);
  EXPECT_EQ(run({"construct", "--scheme", "c1", "--n", "8", "--b1", "3", "--b2", "1", "--bogus", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--scheme", "cyclic", "--n", "7", "--q", "2", "--h", "1,x,1"}).error().at("error").at("kind"),
            "BadParameters");
  EXPECT_EQ(run({"construct", "--scheme", "cyclic", "--n", "7", "--q", "6", "--h", "1,1"}).error().at("error").at("kind"),
            "NotPrimePower");
}

TEST_F(CliTest, VerifyStreaming) {
  const auto good = path("mds62.json");
  io::write_code_file(good, mds_code(6, 4));
  auto r = run({"verify", "--code", good, "--a", "2", "--b", "3", "--e", "1", "--w", "6", "--tau", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("result").at("verdict"), true);
  EXPECT_EQ(r.doc().at("config").at("field").at("q"), 7);

  std::mt19937_64 rng(5);
  const auto bad = path("sys63.json");
  io::write_code_file(bad, oracle::random_systematic_code(Field::make(7), 6, 3, rng));
  r = run({"verify", "--code", bad, "--a", "2", "--b", "3", "--e", "1", "--w", "6", "--tau", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc().at("result").at("witness"), json::parse(R"({"n":6,"support":[0,3,4,5]})"));

  r = run({"verify", "--code", path("missing.json"), "--a", "2", "--b", "3", "--e", "1", "--w", "6", "--tau", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.error().at("error").at("kind"), "BadFormat");

  r = run({"verify", "--code", good, "--a", "2", "--b", "3", "--e", "1", "--w", "6", "--tau", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.error().at("error").at("kind"), "UnsupportedDelay");
}

TEST_F(CliTest, VerifyTwoBurstAndWrap) {
  const auto file = path("c1.json");
  io::write_code_file(file, construction_one(9, 3, 1));
  auto r = run({"verify", "--code", file, "--b1", "3", "--b2", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("config").at("check"), "b1b2");
  r = run({"verify", "--code", file, "--check", "wrap", "--b1", "3", "--b2", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"verify", "--code", file, "--b1", "4", "--b2", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.doc().at("result").at("witness").is_null());
  r = run({"verify", "--code", file, "--check", "subblock", "--b", "3", "--e", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, AnalyzeRate) {
  const auto r = run({"analyze", "rate", "--a", "2", "--b", "3", "--e", "1", "--w", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = r.doc().at("result");
  EXPECT_EQ(res.at("r_opt"), "1/2");
  EXPECT_EQ(res.at("prior_bound"), "4/7");
  EXPECT_EQ(res.at("m"), 2);
}

TEST_F(CliTest, AnalyzeRateSweepCsvGolden) {
  const auto r = run({"--format", "csv", "analyze", "rate", "--a", "2", "--b", "3", "--e", "1", "--w", "5:12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden / "rate_sweep.csv"));
}

TEST_F(CliTest, AnalyzeCyclic) {
  const auto r = run({"analyze", "cyclic", "--n", "7", "--q", "2", "--h", "1,0,1,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden / "cyclic_7_4.json"));
  const auto res = r.doc().at("result");
  EXPECT_EQ(res.at("z"), 1);
  EXPECT_EQ(res.at("bound"), 3);
  EXPECT_EQ(res.at("d"), 3);
  EXPECT_EQ(res.at("meets"), true);
}

TEST_F(CliTest, AnalyzeSparsityAndFieldBound) {
  auto r = run({"analyze", "sparsity", "--n", "8", "--b", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("result").at("minimum_possible"), 15);
  EXPECT_EQ(r.doc().at("result").at("q_star_lower"), 2);

  r = run({"analyze", "fieldbound", "--n", "7", "--b", "2", "--e", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("result").at("random_field_lower_bound"), 3);
  EXPECT_EQ(r.doc().at("result").at("random_field_lower_bound_assumes"), "MDS conjecture");

  r = run({"analyze", "fieldbound", "--n", "7", "--b", "2", "--e", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.doc().at("result").at("random_field_lower_bound").is_null());
}

TEST_F(CliTest, AnalyzeTableIsAligned) {
  const auto r = run({"--format", "table", "analyze", "sparsity", "--n", "8", "--b", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::optional<std::size_t> column;
  while (std::getline(lines, line)) {
    const auto gap = line.find("  ");
    ASSERT_NE(gap, std::string::npos) << line;
    const auto value = line.find_first_not_of(' ', gap);
    if (!column) column = value;
    EXPECT_EQ(value, *column) << line;
  }
}

TEST_F(CliTest, Search) {
  auto r = run({"search", "--n", "5", "--b1", "2", "--b2", "1", "--q", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc().at("result").at("found"), false);
  const auto file = path("found.json");
  r = run({"search", "--n", "5", "--b1", "2", "--b2", "1", "--q", "3", "--out", file});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(is_b1b2_code(io::read_code_file(file), 2, 1).verdict);
  r = run({"search", "--n", "7", "--b", "2", "--e", "2", "--q", "2"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, Simulate) {
  const auto file = path("mds75.json");
  io::write_code_file(file, mds_code(7, 5));
  const std::vector<std::string> base{"simulate", "--code", file, "--a", "2", "--b", "3", "--e", "2", "--w", "7", "--tau", "6"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  };
  auto r = with({"--source", "periodic", "--periods", "100", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("result").at("slots"), 700);
  EXPECT_EQ(r.doc().at("result").at("messages_failed"), 0);
  EXPECT_EQ(r.doc().at("config").at("rng"), "mt19937_64/u53");

  const std::vector<std::string> ge{"--source", "ge", "--length", "500", "--seed", "3", "--p-gb", "0.05",
                                    "--p-bg", "0.5", "--e-good", "0.01", "--e-bad", "0.6"};
  const auto first = with(ge), second = with(ge);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.code, second.code);

  EXPECT_EQ(with({"--source", "periodic", "--periods", "3"}).code, 2);  // no seed
  EXPECT_EQ(with({"--source", "ge", "--length", "10", "--seed", "1", "--p-gb", "2"}).error().at("error").at("kind"),
            "BadProbability");
}

TEST_F(CliTest, SimulatePeriodicGuard) {
  const auto file = path("mds62.json");
  io::write_code_file(file, mds_code(6, 4));
  const auto r = run({"simulate", "--code", file, "--a", "2", "--b", "3", "--e", "1", "--w", "6", "--tau", "5",
                      "--source", "periodic", "--periods", "100", "--seed", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.error().at("error").at("kind"), "ParameterViolation");
}

TEST_F(CliTest, UsageAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "analyze", "sparsity", "--n", "8", "--b", "3"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("construct"), std::string::npos);
  EXPECT_EQ(run({"--version"}).out, std::string(cli::kVersion) + "\n");
}
