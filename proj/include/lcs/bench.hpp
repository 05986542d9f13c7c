#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcs/baselines.hpp"
#include "lcs/core.hpp"
#include "lcs/datagen.hpp"
#include "lcs/parallel.hpp"

namespace lcs {

// One solver invocation through the common name-based dispatch used by both
// the solve and bench commands.
struct AlgoResult {
  Sequence cs;
  std::optional<int> search_range_used;
  std::vector<int> search_ranges;  // sweep actually examined (dea family)
  std::string method;              // "mf", "mc", "mf+mc" or "n/a"
  double elapsed_ms = 0;
};

const std::vector<std::string>& known_algorithms();

AlgoResult run_algorithm(const std::string& algo, const Dataset& d,
                         long long cell_budget, std::optional<int> search_range,
                         Exec exec);

struct BenchSetting {
  int k = 1;
  int n = 1;
  int sigma = 4;
  Distribution distribution = Distribution::uniform;
  double beta = 0.5;
};

struct BenchRow {
  std::string dataset_id;
  int k = 0;
  int n = 0;
  int sigma = 0;
  std::string algo;
  int cs_len = 0;
  bool valid = false;
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
  std::optional<int> L_used;
};

struct BenchConfig {
  std::vector<BenchSetting> settings;   // generated datasets
  std::vector<Dataset> file_datasets;   // pre-parsed file datasets
  std::vector<std::string> file_ids;
  std::vector<std::string> algos;
  int reps = 10;
  std::uint64_t seed = 0;
  long long cell_budget = kDefaultCellBudget;
  std::optional<int> search_range;
  bool timings = false;  // write measured times into the CSV (breaks byte-stability)
  Exec exec = Exec::parallel;
};

// One row per (dataset, algo), datasets processed in parallel, rows emitted
// in configuration order. Every row's validity is recomputed independently
// of the solver; an invalid result aborts the run.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

// Header, rows, then '#'-prefixed per-setting summary lines with the
// "mean (stddev)" cell format.
std::string render_csv(const BenchConfig& cfg, const std::vector<BenchRow>& rows);

}  // namespace lcs
