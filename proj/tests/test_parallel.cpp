#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcs/analysis.hpp"
#include "lcs/baselines.hpp"
#include "lcs/bench.hpp"
#include "lcs/extension.hpp"
#include "oracles.hpp"

// Serial and OpenMP paths must produce byte-identical results: all parallel
// kernels write into index-addressed slots and reduce in index order.

using namespace lcs;

TEST_CASE("dea_solve: serial equals parallel") {
  SplitMix64 rng(211);
  for (int iter = 0; iter < 40; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(4));
    const Dataset d = oracle::random_dataset(rng, 8, 0, 60, sigma);
    DeaOptions ser, par;
    ser.exec = Exec::serial;
    par.exec = Exec::parallel;
    const SolveResult a = dea_solve(d, ser);
    const SolveResult b = dea_solve(d, par);
    CHECK(a.cs == b.cs);
    CHECK(a.origin.kind == b.origin.kind);
    CHECK(a.search_range_used == b.search_range_used);
  }
}

TEST_CASE("greedy and tournament: serial equals parallel") {
  SplitMix64 rng(223);
  for (int iter = 0; iter < 30; ++iter) {
    const Dataset d = oracle::random_dataset(rng, 7, 0, 40, 3);
    CHECK(greedy(d, Exec::serial) == greedy(d, Exec::parallel));
    CHECK(tournament(d, Exec::serial) == tournament(d, Exec::parallel));
  }
}

TEST_CASE("Monte Carlo estimator: serial equals parallel exactly") {
  for (std::uint64_t seed : {1ull, 77ull, 31337ull}) {
    const auto a = estimate_pairwise_elcs(60, 4, 64, seed, Exec::serial);
    const auto b = estimate_pairwise_elcs(60, 4, 64, seed, Exec::parallel);
    CHECK(a.mean == b.mean);
    CHECK(a.stddev == b.stddev);
  }
}

TEST_CASE("bench rows and CSV: serial equals parallel") {
  BenchConfig cfg;
  BenchSetting st;
  st.k = 4;
  st.n = 30;
  st.sigma = 4;
  st.distribution = Distribution::random_contents;
  cfg.settings = {st};
  cfg.algos = {"longrun", "dea-mc", "tournament"};
  cfg.reps = 4;
  cfg.seed = 5;

  cfg.exec = Exec::serial;
  const auto rows_s = run_bench(cfg);
  const std::string csv_s = render_csv(cfg, rows_s);
  cfg.exec = Exec::parallel;
  const auto rows_p = run_bench(cfg);
  const std::string csv_p = render_csv(cfg, rows_p);
  CHECK(csv_s == csv_p);
  REQUIRE(rows_s.size() == rows_p.size());
  for (std::size_t i = 0; i < rows_s.size(); ++i) {
    CHECK(rows_s[i].cs_len == rows_p[i].cs_len);
    CHECK(rows_s[i].dataset_id == rows_p[i].dataset_id);
  }
}
