#include "tstar/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <new>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tstar/bench.hpp"
#include "tstar/csv.hpp"
#include "tstar/fast.hpp"
#include "tstar/inference.hpp"
#include "tstar/oracle.hpp"
#include "tstar/report.hpp"

namespace tstar::cli {
namespace {

struct RunConfig {
  std::string input;
  std::string x_col = "0";
  std::string y_col = "1";
  bool header = false;
  std::string method = "auto";
  long long permutations = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "json";
  std::size_t max_grid_cells = kDefaultMaxGridCells;
  std::size_t naive_size_cap = kDefaultNaiveSizeCap;
  bool allow_large_naive = false;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  unsigned repeats = 3;
  std::string distribution = "independent";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::size_t max_grid_cells = kDefaultMaxGridCells;
};

// Parse and validation failures carry their exit code.
struct CommandError {
  int code;
  std::string message;
};

Dataset load_dataset(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw CommandError{kParseError, "cannot open input file '" + cfg.input + "'"};
  try {
    const csv::Table table = csv::read(in, cfg.header);
    const auto xs = csv::numeric_column(table, csv::resolve_column(table, cfg.x_col));
    const auto ys = csv::numeric_column(table, csv::resolve_column(table, cfg.y_col));
    return validate(xs, ys);
  } catch (const csv::ParseError& e) {
    throw CommandError{kParseError, std::string("parse error: ") + e.what()};
  } catch (const csv::ColumnError& e) {
    throw CommandError{kParseError, std::string("column error: ") + e.what()};
  } catch (const Error& e) {
    throw CommandError{kValidationError, std::string("validation error: ") + e.what()};
  }
}

void check_naive_cap(const RunConfig& cfg, std::size_t n) {
  if (n > cfg.naive_size_cap && !cfg.allow_large_naive) {
    throw CommandError{kResourceLimit,
                       "naive method refused: n = " + std::to_string(n) +
                           " exceeds the naive size cap of " + std::to_string(cfg.naive_size_cap) +
                           " (O(n^4) work). Use --method fast, raise --naive-size-cap, or pass "
                           "--allow-large-naive."};
  }
}

struct NaiveRun {
  TauStarResult result;
  std::int64_t direct_sum = 0;
};

NaiveRun compute_naive(const Dataset& d) {
  const oracle::NaiveStatistic stat = oracle::tstar_naive(d);
  const oracle::QuadrupleCounts counts = oracle::count_quadruples_naive(d);
  NaiveRun run;
  TauStarResult& r = run.result;
  r.n = d.size();
  r.m_x = distinct_count(rank_dense(d.xs()));
  r.m_y = distinct_count(rank_dense(d.ys()));
  r.n_c = counts.concordant;
  r.n_d = counts.discordant;
  r.numerator = stat.sum;
  r.denominator = stat.denominator;
  r.tstar = stat.tstar();
  r.method = Method::Naive;
  run.direct_sum = stat.sum;
  return run;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CommandError& e) {
    err << e.message << '\n';
    return e.code;
  } catch (const TooFewSamples& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const InvalidPermutationCount& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const GridTooLarge& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const SampleTooLarge& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory while building grids\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  }
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Dataset d = load_dataset(cfg);
    if (d.size() < 4) throw TooFewSamples(d.size(), 4);
    if (cfg.method == "naive") check_naive_cap(cfg, d.size());

    const auto start = std::chrono::steady_clock::now();
    TauStarResult result;
    if (cfg.method == "naive") {
      result = compute_naive(d).result;
    } else {
      FastOptions opts;
      opts.max_grid_cells = cfg.max_grid_cells;
      result = tstar_fast(d, opts);
    }
    std::optional<report::PermutationSummary> perm;
    if (cfg.permutations != 0) {
      PermutationOptions popts;
      popts.max_grid_cells = cfg.max_grid_cells;
      popts.threads = cfg.threads;
      const PermutationTestResult pt = permutation_test(d, cfg.permutations, cfg.seed, popts);
      perm = report::PermutationSummary{pt.p_value, pt.permutations, pt.seed};
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    if (cfg.format == "text") {
      report::write_text(out, result, perm, elapsed_ms);
    } else {
      out << report::to_json(result, perm, elapsed_ms).dump() << '\n';
    }
    return kSuccess;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Dataset d = load_dataset(cfg);
    if (d.size() < 4) throw TooFewSamples(d.size(), 4);
    check_naive_cap(cfg, d.size());

    FastOptions opts;
    opts.max_grid_cells = cfg.max_grid_cells;
    opts.check_untied = true;
    const TauStarResult fast = tstar_fast(d, opts);
    const NaiveRun naive = compute_naive(d);

    nlohmann::ordered_json diff = nlohmann::ordered_json::array();
    const auto compare = [&](const char* field, auto naive_value, auto fast_value) {
      if (naive_value != fast_value) {
        diff.push_back({{"field", field}, {"naive", naive_value}, {"fast", fast_value}});
      }
    };
    compare("n_c", naive.result.n_c, fast.n_c);
    compare("n_d", naive.result.n_d, fast.n_d);
    compare("sum", naive.direct_sum, fast.numerator);
    compare("denominator", naive.result.denominator, fast.denominator);

    nlohmann::ordered_json j;
    j["match"] = diff.empty();
    j["n"] = d.size();
    j["n_c"] = fast.n_c;
    j["n_d"] = fast.n_d;
    j["numerator"] = fast.numerator;
    j["denominator"] = fast.denominator;
    j["tstar"] = fast.tstar;
    if (!diff.empty()) j["diff"] = diff;
    if (cfg.format == "text") {
      out << (diff.empty() ? "match" : "MISMATCH") << ": n = " << d.size()
          << ", n_c = " << fast.n_c << ", n_d = " << fast.n_d << '\n';
      for (const auto& entry : diff) out << "  " << entry.dump() << '\n';
    } else {
      out << j.dump() << '\n';
    }
    return diff.empty() ? kSuccess : kVerifyMismatch;
  });
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto dist = bench::parse_distribution(cfg.distribution);
    if (!dist) throw CommandError{kValidationError, "unknown distribution '" + cfg.distribution + "'"};
    for (const std::size_t n : cfg.sizes) {
      if (n < 4) throw TooFewSamples(n, 4);
    }
    const auto rows = bench::run(cfg.sizes, cfg.repeats, *dist, cfg.seed, cfg.max_grid_cells);

    if (cfg.format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json e;
        e["n"] = row.n;
        e["m_x"] = row.m_x;
        e["m_y"] = row.m_y;
        e["median_ms"] = row.median_ms;
        e["ratio"] = row.ratio ? nlohmann::ordered_json(*row.ratio) : nullptr;
        e["exponent"] = row.exponent ? nlohmann::ordered_json(*row.exponent) : nullptr;
        j.push_back(e);
      }
      out << j.dump() << '\n';
      return kSuccess;
    }
    out << "distribution " << bench::distribution_name(*dist) << ", repeats "
        << std::max(1u, cfg.repeats) << ", seed " << cfg.seed << '\n';
    out << std::setw(10) << "n" << std::setw(10) << "m_x" << std::setw(10) << "m_y"
        << std::setw(14) << "median_ms" << std::setw(10) << "ratio" << std::setw(10)
        << "exponent" << '\n';
    out << std::fixed;
    for (const auto& row : rows) {
      out << std::setw(10) << row.n << std::setw(10) << row.m_x << std::setw(10) << row.m_y
          << std::setw(14) << std::setprecision(3) << row.median_ms;
      if (row.ratio) {
        out << std::setw(10) << std::setprecision(2) << *row.ratio << std::setw(10)
            << *row.exponent;
      } else {
        out << std::setw(10) << "-" << std::setw(10) << "-";
      }
      out << '\n';
    }
    out << std::defaultfloat;
    return kSuccess;
  });
}

void add_input_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--input", cfg.input, "CSV file")->required();
  cmd.add_option("--x-col", cfg.x_col, "x column: 0-based index or header name");
  cmd.add_option("--y-col", cfg.y_col, "y column: 0-based index or header name");
  cmd.add_flag("--header", cfg.header, "first line is a header row");
  cmd.add_option("--max-grid-cells", cfg.max_grid_cells, "cell budget for the O(n^2) grids");
  cmd.add_option("--naive-size-cap", cfg.naive_size_cap, "largest n accepted by the naive method");
  cmd.add_flag("--allow-large-naive", cfg.allow_large_naive, "ignore the naive size cap");
  cmd.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergsma-Dassios sign covariance t* in O(n^2)", "tstar"};
  app.require_subcommand(1);

  RunConfig compute_cfg;
  auto* compute = app.add_subcommand("compute", "compute t* for two CSV columns");
  add_input_options(*compute, compute_cfg);
  compute->add_option("--method", compute_cfg.method, "algorithm")
      ->check(CLI::IsMember({"auto", "fast", "naive"}));
  compute->add_option("--permutations", compute_cfg.permutations,
                      "permutation test size B (0 = no test)");
  compute->add_option("--seed", compute_cfg.seed, "permutation test seed");
  compute->add_option("--threads", compute_cfg.threads, "permutation test threads (0 = all cores)");

  RunConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "check the O(n^2) counts against brute force");
  add_input_options(*verify, verify_cfg);

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "time the fast method across sample sizes");
  bench->add_option("--sizes", bench_cfg.sizes, "comma-separated sample sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--repeats", bench_cfg.repeats, "timed runs per size (median reported)");
  bench->add_option("--distribution", bench_cfg.distribution, "independent|monotone|mixed-ties");
  bench->add_option("--seed", bench_cfg.seed, "generator seed");
  bench->add_option("--max-grid-cells", bench_cfg.max_grid_cells, "cell budget");
  bench->add_option("--format", bench_cfg.format, "table format")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "see: tstar " << sub->get_name() << " --help\n";
    }
    return kParseError;
  }

  if (compute->parsed()) return cmd_compute(compute_cfg, out, err);
  if (verify->parsed()) return cmd_verify(verify_cfg, out, err);
  return cmd_bench(bench_cfg, out, err);
}

}  // namespace tstar::cli
