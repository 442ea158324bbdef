#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"
#include "tstar/bench.hpp"
#include "tstar/cli.hpp"
#include "tstar/csv.hpp"

namespace tstar {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tstar_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }

  std::string write_pairs(const std::string& name, const std::vector<double>& xs,
                          const std::vector<double>& ys) {
    std::ostringstream s;
    s.precision(17);
    for (std::size_t i = 0; i < xs.size(); ++i) s << xs[i] << ',' << ys[i] << '\n';
    return write(name, s.str());
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  json out_json() const { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ComputeReportsCounts) {
  const auto path = write("a.csv", "1,1\n2,2\n3,3\n4,4\n");
  ASSERT_EQ(run({"compute", "--input", path, "--x-col", "0", "--y-col", "1", "--method", "fast"}),
            0);
  const json j = out_json();
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["n_c"], 1);
  EXPECT_EQ(j["n_d"], 0);
  EXPECT_EQ(j["numerator"], 16);
  EXPECT_EQ(j["denominator"], 24);
  EXPECT_DOUBLE_EQ(j["tstar"].get<double>(), 2.0 / 3.0);
  EXPECT_EQ(j["method"], "fast-untied");
  EXPECT_FALSE(j.contains("p_value"));
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST_F(CliTest, JsonFieldOrderIsFixed) {
  const auto path = write("a.csv", "1,1\n2,2\n3,3\n4,4\n");
  ASSERT_EQ(run({"compute", "--input", path, "--permutations", "9", "--seed", "3"}), 0);
  std::vector<std::string> keys;
  const auto j = nlohmann::ordered_json::parse(out_.str());
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "m_x", "m_y", "n_c", "n_d", "numerator",
                                            "denominator", "tstar", "method", "p_value",
                                            "permutations", "seed", "elapsed_ms"}));
}

TEST_F(CliTest, MalformedRowCitesLine) {
  const auto path = write("bad.csv", "1,1\n2,2\na,b\n4,4\n");
  EXPECT_EQ(run({"compute", "--input", path}), cli::kParseError);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();

  const auto arity = write("arity.csv", "1,1\n2,2\n3\n4,4\n5,5\n");
  EXPECT_EQ(run({"compute", "--input", arity}), cli::kParseError);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos);

  EXPECT_EQ(run({"compute", "--input", (dir_ / "missing.csv").string()}), cli::kParseError);
}

TEST_F(CliTest, ValidationFailures) {
  EXPECT_EQ(run({"compute", "--input", write("three.csv", "1,1\n2,2\n3,3\n")}),
            cli::kValidationError);
  EXPECT_NE(err_.str().find("too few samples"), std::string::npos);
  EXPECT_EQ(run({"compute", "--input", write("nan.csv", "1,1\n2,nan\n3,3\n4,4\n")}),
            cli::kValidationError);
  EXPECT_NE(err_.str().find("index 1"), std::string::npos);
  EXPECT_EQ(run({"compute", "--input", write("ok.csv", "1,1\n2,2\n3,3\n4,4\n"),
                 "--permutations", "-1"}),
            cli::kValidationError);
}

TEST_F(CliTest, GridBudgetIsAResourceLimit) {
  const auto path = write("a.csv", "1,1\n2,2\n3,3\n4,4\n");
  EXPECT_EQ(run({"compute", "--input", path, "--max-grid-cells", "10"}), cli::kResourceLimit);
}

TEST_F(CliTest, HeaderAndNamedColumns) {
  const auto path = write("h.csv", "id,y,x\n1,4,1\n2,3,2\n3,2,3\n4,1,4\n");
  ASSERT_EQ(run({"compute", "--input", path, "--header", "--x-col", "x", "--y-col", "y"}), 0);
  EXPECT_EQ(out_json()["n_c"], 1);
  EXPECT_EQ(run({"compute", "--input", path, "--header", "--x-col", "zz"}), cli::kParseError);
  EXPECT_EQ(run({"compute", "--input", path, "--x-col", "x"}), cli::kParseError);
}

TEST_F(CliTest, NaiveAndFastAgree) {
  CounterRng rng(61, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 4 + rng.below(47);
    const auto xs = trial % 2 ? testing::continuous(n, rng) : testing::alphabet_draws(n, 4, rng);
    const auto ys = trial % 2 ? testing::continuous(n, rng) : testing::alphabet_draws(n, 3, rng);
    const auto path = write_pairs("p.csv", xs, ys);
    ASSERT_EQ(run({"compute", "--input", path, "--method", "naive"}), 0);
    json naive = out_json();
    ASSERT_EQ(run({"compute", "--input", path, "--method", "fast"}), 0);
    json fast = out_json();
    EXPECT_EQ(naive["method"], "naive");
    for (const char* key : {"n", "m_x", "m_y", "n_c", "n_d", "numerator", "denominator", "tstar"}) {
      EXPECT_EQ(naive[key], fast[key]) << key;
    }
    ASSERT_EQ(run({"verify", "--input", path}), 0) << out_.str();
    EXPECT_TRUE(out_json()["match"].get<bool>());
  }
}

TEST_F(CliTest, VerifyRefusesLargeInputsWithoutOverride) {
  std::vector<double> xs(300), ys(300);
  for (std::size_t i = 0; i < 300; ++i) {
    xs[i] = static_cast<double>(i);
    ys[i] = static_cast<double>((i * 7) % 300);
  }
  const auto path = write_pairs("big.csv", xs, ys);
  EXPECT_EQ(run({"verify", "--input", path}), cli::kResourceLimit);
  EXPECT_NE(err_.str().find("--naive-size-cap"), std::string::npos);
  EXPECT_EQ(run({"compute", "--input", path, "--method", "naive"}), cli::kResourceLimit);
}

TEST_F(CliTest, VerifyHandlesHeavyTies) {
  const auto path = write("ties.csv", "1,1\n1,1\n1,2\n2,1\n2,2\n2,2\n3,1\n3,3\n3,3\n1,3\n");
  EXPECT_EQ(run({"verify", "--input", path, "--format", "text"}), 0);
  EXPECT_EQ(out_.str().rfind("match", 0), 0u);
}

TEST_F(CliTest, OutputIsStableApartFromElapsedTime) {
  CounterRng rng(62, 0);
  const auto path =
      write_pairs("s.csv", testing::continuous(30, rng), testing::continuous(30, rng));
  const std::vector<std::string> args{"compute", "--input", path, "--permutations", "99",
                                      "--seed", "17"};
  ASSERT_EQ(run(args), 0);
  json first = out_json();
  ASSERT_EQ(run(args), 0);
  json second = out_json();
  first.erase("elapsed_ms");
  second.erase("elapsed_ms");
  EXPECT_EQ(first.dump(), second.dump());
  EXPECT_EQ(first["permutations"], 99);
  EXPECT_EQ(first["seed"], 17);
}

TEST_F(CliTest, TextFormat) {
  const auto path = write("a.csv", "1,1\n2,2\n3,3\n4,4\n");
  ASSERT_EQ(run({"compute", "--input", path, "--format", "text"}), 0);
  EXPECT_NE(out_.str().find("16 / 24"), std::string::npos);
}

TEST_F(CliTest, BenchSmokeAndDistributions) {
  ASSERT_EQ(run({"bench", "--sizes", "4", "--repeats", "1", "--distribution", "monotone",
                 "--seed", "1", "--format", "json"}),
            0);
  const json rows = out_json();
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["n"], 4);
  EXPECT_TRUE(rows[0]["ratio"].is_null());

  ASSERT_EQ(run({"bench", "--sizes", "200,400", "--repeats", "1", "--distribution",
                 "mixed-ties", "--seed", "2"}),
            0);
  EXPECT_NE(out_.str().find("mixed-ties"), std::string::npos);
  EXPECT_EQ(run({"bench", "--sizes", "3", "--distribution", "monotone"}), cli::kValidationError);
  EXPECT_EQ(run({"bench", "--sizes", "10", "--distribution", "weird"}), cli::kValidationError);
}

TEST(BenchGenerators, MixedTiesAlphabetSize) {
  const std::size_t n = 2000;
  const auto d = bench::generate(bench::Distribution::MixedTies, n, 5);
  const auto rx = rank_dense(d.xs());
  const auto ry = rank_dense(d.ys());
  EXPECT_EQ(distinct_count(rx), 200u);
  EXPECT_EQ(distinct_count(ry), 200u);
  const auto mono = bench::generate(bench::Distribution::Monotone, 100, 5);
  EXPECT_TRUE(std::equal(mono.xs().begin(), mono.xs().end(), mono.ys().begin()));
}

TEST(Csv, TrailingBlankLinesAndInteriorBlankLines) {
  std::istringstream ok("1,2\n3,4\n\n\n");
  EXPECT_EQ(csv::read(ok, false).rows.size(), 2u);
  std::istringstream bad("1,2\n\n3,4\n");
  try {
    csv::read(bad, false);
    FAIL();
  } catch (const csv::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream crlf("1.5, 2e3\r\n-3,+4\r\n");
  const auto t = csv::read(crlf, false);
  EXPECT_EQ(csv::numeric_column(t, 1), (std::vector<double>{2000.0, 4.0}));
}

TEST(Executable, PropagatesExitCodes) {
  const fs::path dir = fs::temp_directory_path() / ("tstar_exe_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::ofstream(dir / "bad.csv") << "1,1\n2,2\na,b\n4,4\n";
  const std::string cmd = std::string(TSTAR_CLI_PATH) + " compute --input " +
                          (dir / "bad.csv").string() + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  fs::remove_all(dir);
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace tstar
