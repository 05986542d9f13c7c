// Command-line front end: gen, solve, bench, bounds, analyze.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcs/analysis.hpp"
#include "lcs/baselines.hpp"
#include "lcs/bench.hpp"
#include "lcs/core.hpp"
#include "lcs/datagen.hpp"
#include "lcs/extension.hpp"
#include "lcs/io.hpp"

namespace {

using nlohmann::json;

struct ExitCode {
  static constexpr int ok = 0;
  static constexpr int usage = 1;   // usage or domain errors
  static constexpr int parse = 2;   // input file problems
  static constexpr int budget = 3;  // resource budget exceeded
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

// Printable-safe rendering for JSON: non-ASCII bytes become \xNN.
std::string printable(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  char buf[8];
  for (unsigned char c : s) {
    if (c >= 0x20 && c < 0x7F) {
      out.push_back(static_cast<char>(c));
    } else {
      std::snprintf(buf, sizeof buf, "\\x%02X", c);
      out += buf;
    }
  }
  return out;
}

lcs::Distribution dist_from_name(const std::string& name) {
  if (name == "uniform") return lcs::Distribution::uniform;
  if (name == "random") return lcs::Distribution::random_contents;
  if (name == "beta") return lcs::Distribution::beta_skew;
  throw std::invalid_argument("unknown distribution: " + name +
                              " (expected uniform|random|beta)");
}

std::vector<int> parse_int_list(const std::string& csv, const char* field) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad integer in ") + field + ": " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(field) + " must not be empty");
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct CommonInputFlags {
  std::vector<std::string> paths;
  std::string format = "lines";
  std::string alphabet;
  bool drop_unknown = false;
  int truncate = 0;

  lcs::Dataset load() const {
    lcs::ParseOptions opt;
    opt.format = lcs::format_from_name(format);
    opt.alphabet = alphabet;
    opt.drop_unknown = drop_unknown;
    opt.truncate = truncate;
    return lcs::parse_input(paths, opt);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("inputs", paths, "input files")->required()->expected(-1);
    cmd->add_option("--format", format, "input format: fasta|lines|raw");
    cmd->add_option("--alphabet", alphabet,
                    "declared alphabet glyphs (default: inferred, first appearance)");
    cmd->add_flag("--drop-unknown", drop_unknown,
                  "drop glyphs outside the declared alphabet instead of failing");
    cmd->add_option("--truncate", truncate, "keep only the first N characters per sequence");
  }
};

int cmd_gen(int k, int n, int sigma, const std::string& dist, double beta,
            std::uint64_t seed, const std::string& out_path) {
  lcs::GenSpec spec;
  spec.k = k;
  spec.n = n;
  spec.sigma = sigma;
  spec.distribution = dist_from_name(dist);
  spec.beta = beta;
  spec.seed = seed;
  const lcs::Dataset d = lcs::generate(spec);
  std::ostringstream text;
  lcs::write_lines(text, d);
  write_output(out_path, text.str());
  return ExitCode::ok;
}

int cmd_solve(const CommonInputFlags& input, const std::string& algo,
              std::optional<int> search_range, long long cell_budget,
              std::uint64_t seed, bool serial, const std::string& out_path) {
  const lcs::Dataset d = input.load();
  const lcs::Exec exec = serial ? lcs::Exec::serial : lcs::Exec::parallel;
  const lcs::AlgoResult r = lcs::run_algorithm(algo, d, cell_budget, search_range, exec);

  json report;
  report["algorithm"] = algo;
  report["cs"] = printable(lcs::to_text(d.alphabet, r.cs));
  report["length"] = r.cs.size();
  report["valid"] = lcs::is_common_subsequence(r.cs, d);
  report["elapsed_ms"] = r.elapsed_ms;
  report["config"] = {{"method", r.method},
                      {"search_ranges", r.search_ranges},
                      {"seed", seed}};
  write_output(out_path, report.dump(2) + "\n");
  return ExitCode::ok;
}

int cmd_bounds(const CommonInputFlags& input, const std::string& algos_csv,
               long long cell_budget, bool serial) {
  const lcs::Dataset d = input.load();
  const lcs::Exec exec = serial ? lcs::Exec::serial : lcs::Exec::parallel;
  const lcs::BoundsReport report = lcs::upper_bound(d, cell_budget);

  std::ostringstream out;
  out << "upper_bound: " << report.upper_bound << "\n";
  out << "chosen_sequences:";
  for (int idx : report.chosen_sequence_indices) out << ' ' << idx;
  out << "\n";
  if (report.exact)
    out << "exact: " << *report.exact << "\n";
  else
    out << "exact: n/a (over cell budget)\n";

  const double reference =
      report.exact ? static_cast<double>(*report.exact)
                   : static_cast<double>(report.upper_bound);
  for (const auto& algo : split_csv(algos_csv)) {
    const lcs::AlgoResult r =
        lcs::run_algorithm(algo, d, cell_budget, std::nullopt, exec);
    out << "algo " << algo << ": len=" << r.cs.size();
    if (r.cs.empty()) {
      out << " ratio=n/a (empty CS)\n";
    } else {
      const auto ratio =
          lcs::performance_ratio(reference, static_cast<double>(r.cs.size()));
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ratio.ratio);
      out << " ratio=" << buf << "\n";
    }
  }
  std::cout << out.str();
  return ExitCode::ok;
}

int cmd_bench(const std::string& k_csv, const std::string& n_csv, int sigma,
              const std::string& dist, double beta, int reps,
              const std::string& algos_csv, std::uint64_t seed,
              long long cell_budget, std::optional<int> search_range, bool timings,
              bool serial, const CommonInputFlags& input, bool have_inputs,
              const std::string& out_path) {
  lcs::BenchConfig cfg;
  cfg.algos = split_csv(algos_csv);
  cfg.reps = reps;
  cfg.seed = seed;
  cfg.cell_budget = cell_budget;
  cfg.search_range = search_range;
  cfg.timings = timings;
  cfg.exec = serial ? lcs::Exec::serial : lcs::Exec::parallel;

  if (have_inputs) {
    cfg.file_datasets.push_back(input.load());
    std::string id;
    for (const auto& p : input.paths) id += (id.empty() ? "" : "+") + p;
    cfg.file_ids.push_back(id);
  } else {
    for (int k : parse_int_list(k_csv, "--k"))
      for (int n : parse_int_list(n_csv, "--n")) {
        lcs::BenchSetting st;
        st.k = k;
        st.n = n;
        st.sigma = sigma;
        st.distribution = dist_from_name(dist);
        st.beta = beta;
        cfg.settings.push_back(st);
      }
  }

  const auto rows = lcs::run_bench(cfg);
  write_output(out_path, lcs::render_csv(cfg, rows));
  return ExitCode::ok;
}

void print_analyze(const std::string& name, const std::string& params, double value,
                   bool with_ceil) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  std::cout << name << "  " << params << "\n";
  std::cout << "value = " << buf;
  if (with_ceil) std::cout << "  (ceil = " << static_cast<long long>(std::ceil(value)) << ")";
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-sequence LCS toolkit: deposition-and-extension heuristic, "
               "baselines, exact oracles, bounds and dataset tooling"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a simulated dataset (lines format)");
  int g_k = 10, g_n = 100, g_sigma = 4;
  std::string g_dist = "uniform", g_out;
  double g_beta = 0.5;
  std::uint64_t g_seed = 0;
  gen->add_option("--k", g_k, "number of sequences");
  gen->add_option("--n", g_n, "sequence length");
  gen->add_option("--sigma", g_sigma, "alphabet size");
  gen->add_option("--dist", g_dist, "uniform|random|beta");
  gen->add_option("--beta", g_beta, "combined content of the first two symbols (beta)");
  gen->add_option("--seed", g_seed, "generator seed");
  gen->add_option("--out", g_out, "output path (default: stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "run one algorithm on a dataset file");
  CommonInputFlags s_input;
  s_input.attach(solve);
  std::string s_algo;
  int s_range = 0;
  long long s_budget = lcs::kDefaultCellBudget;
  std::uint64_t s_seed = 0;
  bool s_serial = false;
  std::string s_out;
  solve->add_option("--algo", s_algo, "dea|dea-mf|dea-mc|dea-full-range|longrun|greedy|tournament|exact")
      ->required();
  solve->add_option("--search-range", s_range, "override the search-range sweep with one L")
      ->check(CLI::PositiveNumber);
  solve->add_option("--cell-budget", s_budget, "cell budget for exact DP");
  solve->add_option("--seed", s_seed, "seed echoed into the report");
  solve->add_flag("--serial", s_serial, "disable the parallel kernels");
  solve->add_option("--out", s_out, "write the JSON report here (default: stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "run an algorithm matrix, emit CSV");
  std::string b_k = "10", b_n = "100", b_dist = "random", b_algos = "longrun,dea-mc";
  int b_sigma = 4, b_reps = 10, b_range = 0;
  double b_beta = 0.5;
  std::uint64_t b_seed = 0;
  long long b_budget = lcs::kDefaultCellBudget;
  bool b_timings = false, b_serial = false;
  std::string b_out;
  CommonInputFlags b_input;
  bench->add_option("--k", b_k, "sequence counts, comma separated");
  bench->add_option("--n", b_n, "sequence lengths, comma separated");
  bench->add_option("--sigma", b_sigma, "alphabet size");
  bench->add_option("--dist", b_dist, "uniform|random|beta");
  bench->add_option("--beta", b_beta, "beta for --dist beta");
  bench->add_option("--reps", b_reps, "datasets per setting");
  bench->add_option("--algos", b_algos, "algorithms, comma separated");
  bench->add_option("--seed", b_seed, "master seed; per-dataset seeds derive from it");
  bench->add_option("--cell-budget", b_budget, "cell budget for exact DP");
  bench->add_option("--search-range", b_range, "override the dea search-range sweep")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--timings", b_timings,
                  "write measured elapsed_ms into the CSV (not byte-stable)");
  bench->add_flag("--serial", b_serial, "disable the parallel kernels");
  bench->add_option("--out", b_out, "output CSV path (default: stdout)");
  bench->add_option("--input", b_input.paths, "benchmark these files instead of generating");
  bench->add_option("--format", b_input.format, "input format for --input");
  bench->add_option("--alphabet", b_input.alphabet, "declared alphabet for --input");
  bench->add_flag("--drop-unknown", b_input.drop_unknown, "drop unknown glyphs in --input");
  bench->add_option("--truncate", b_input.truncate, "truncate --input sequences to N");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "upper bound, exact when affordable, ratios");
  CommonInputFlags d_input;
  d_input.attach(bounds);
  std::string d_algos = "longrun,dea-mc";
  long long d_budget = lcs::kDefaultCellBudget;
  bool d_serial = false;
  bounds->add_option("--algos", d_algos, "algorithms to rate, comma separated");
  bounds->add_option("--cell-budget", d_budget, "cell budget for exact DP");
  bounds->add_flag("--serial", d_serial, "disable the parallel kernels");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "evaluate the search-range formulas");
  analyze->require_subcommand(1);
  double a_P = 0.95, a_r = 0.5, a_elcs = 1.0;
  int a_k = 100, a_L = 1, a_n = 100, a_sigma = 4, a_trials = 300;
  std::uint64_t a_seed = 0;
  auto* eq5 = analyze->add_subcommand("eq5", "range lower bound ceil(n / E(LCS))");
  eq5->add_option("--n", a_n)->required();
  eq5->add_option("--elcs", a_elcs, "expected LCS length")->required();
  auto* eq6 = analyze->add_subcommand("eq6", "existence probability for content r");
  eq6->add_option("--r", a_r)->required();
  eq6->add_option("--L", a_L)->required();
  eq6->add_option("--k", a_k)->required();
  auto* eq7 = analyze->add_subcommand("eq7", "search range for probability P, content r");
  eq7->add_option("--P", a_P)->required();
  eq7->add_option("--k", a_k)->required();
  eq7->add_option("--r", a_r)->required();
  auto* eq8 = analyze->add_subcommand("eq8", "existence probability, uniform contents");
  eq8->add_option("--sigma", a_sigma)->required();
  eq8->add_option("--L", a_L)->required();
  eq8->add_option("--k", a_k)->required();
  auto* eq9 = analyze->add_subcommand("eq9", "search range for probability P, uniform contents");
  eq9->add_option("--P", a_P)->required();
  eq9->add_option("--k", a_k)->required();
  eq9->add_option("--sigma", a_sigma)->required();
  auto* eq10 = analyze->add_subcommand("eq10", "expected LCS estimate 2n/L - 1");
  eq10->add_option("--n", a_n)->required();
  eq10->add_option("--L", a_L)->required();
  auto* elcs = analyze->add_subcommand("elcs", "Monte Carlo pairwise expected LCS");
  elcs->add_option("--n", a_n)->required();
  elcs->add_option("--sigma", a_sigma)->required();
  elcs->add_option("--trials", a_trials);
  elcs->add_option("--seed", a_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    if (*gen) return cmd_gen(g_k, g_n, g_sigma, g_dist, g_beta, g_seed, g_out);
    if (*solve)
      return cmd_solve(s_input, s_algo,
                       s_range > 0 ? std::optional<int>(s_range) : std::nullopt,
                       s_budget, s_seed, s_serial, s_out);
    if (*bench)
      return cmd_bench(b_k, b_n, b_sigma, b_dist, b_beta, b_reps, b_algos, b_seed,
                       b_budget, b_range > 0 ? std::optional<int>(b_range) : std::nullopt,
                       b_timings, b_serial, b_input, !b_input.paths.empty(), b_out);
    if (*bounds) return cmd_bounds(d_input, d_algos, d_budget, d_serial);
    if (*analyze) {
      if (*eq5) {
        print_analyze("eq5", "n=" + std::to_string(a_n) + " elcs=" + std::to_string(a_elcs),
                      lcs::range_lower_bound(a_n, a_elcs), false);
      } else if (*eq6) {
        print_analyze("eq6", "r=" + std::to_string(a_r) + " L=" + std::to_string(a_L) +
                                 " k=" + std::to_string(a_k),
                      lcs::existence_probability(a_r, a_L, a_k), false);
      } else if (*eq7) {
        print_analyze("eq7", "P=" + std::to_string(a_P) + " k=" + std::to_string(a_k) +
                                 " r=" + std::to_string(a_r),
                      lcs::range_for_probability(a_P, a_k, a_r), true);
      } else if (*eq8) {
        print_analyze("eq8", "sigma=" + std::to_string(a_sigma) + " L=" + std::to_string(a_L) +
                                 " k=" + std::to_string(a_k),
                      lcs::existence_probability_uniform(a_sigma, a_L, a_k), false);
      } else if (*eq9) {
        print_analyze("eq9", "P=" + std::to_string(a_P) + " k=" + std::to_string(a_k) +
                                 " sigma=" + std::to_string(a_sigma),
                      lcs::range_for_probability_uniform(a_P, a_k, a_sigma), true);
      } else if (*eq10) {
        print_analyze("eq10", "n=" + std::to_string(a_n) + " L=" + std::to_string(a_L),
                      lcs::expected_lcs_estimate(a_n, a_L), false);
      } else if (*elcs) {
        const auto est = lcs::estimate_pairwise_elcs(a_n, a_sigma, a_trials, a_seed);
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "mean = %.2f  stddev = %.2f  upper = %.2f  trials = %d",
                      est.mean, est.stddev, est.upper_estimate(), a_trials);
        std::cout << "elcs  n=" << a_n << " sigma=" << a_sigma << "\n" << buf << "\n";
      }
      return ExitCode::ok;
    }
  } catch (const lcs::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::budget;
  } catch (const lcs::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::parse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }
  return ExitCode::usage;
}
