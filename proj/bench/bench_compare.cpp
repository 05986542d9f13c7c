// Timing comparison between the serial reference implementations and the
// table-driven kernels, serial and OpenMP. All three must produce identical
// results; this binary checks that while it measures.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "lcs/analysis.hpp"
#include "lcs/baselines.hpp"
#include "lcs/datagen.hpp"
#include "lcs/extension.hpp"
#include "lcs/parallel.hpp"
#include "lcs/reference.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double ref_ms, double serial_ms, double parallel_ms,
         bool identical) {
  std::printf("%-28s %12.1f %12.1f %12.1f %8.1fx %9.1fx   %s\n", name, ref_ms,
              serial_ms, parallel_ms, ref_ms / serial_ms, ref_ms / parallel_ms,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int k = quick ? 12 : 100;
  const int n = quick ? 120 : 1000;
  const int trials = quick ? 40 : 300;
  const int mc_n = quick ? 120 : 400;

  std::printf("threads: %d\n", lcs::worker_count());
  std::printf("%-28s %12s %12s %12s %9s %10s\n", "kernel", "reference_ms",
              "serial_ms", "parallel_ms", "vs_ser", "vs_par");

  bool all_ok = true;

  {
    lcs::GenSpec spec;
    spec.k = k;
    spec.n = n;
    spec.sigma = 4;
    spec.distribution = lcs::Distribution::random_contents;
    spec.seed = 7;
    const lcs::Dataset d = lcs::generate(spec);

    lcs::SolveResult a, b, c;
    lcs::DeaOptions serial_opts, parallel_opts;
    serial_opts.exec = lcs::Exec::serial;
    parallel_opts.exec = lcs::Exec::parallel;
    const double t_ref = time_ms([&] { a = lcs::ref::dea_solve(d); });
    const double t_ser = time_ms([&] { b = lcs::dea_solve(d, serial_opts); });
    const double t_par = time_ms([&] { c = lcs::dea_solve(d, parallel_opts); });
    const bool ok = a.cs == b.cs && b.cs == c.cs;
    all_ok = all_ok && ok;
    row("dea_solve (pool + extend)", t_ref, t_ser, t_par, ok);
  }

  {
    lcs::PairwiseLcsEstimate a, b;
    const double t_ser =
        time_ms([&] { a = lcs::estimate_pairwise_elcs(mc_n, 4, trials, 11, lcs::Exec::serial); });
    const double t_par =
        time_ms([&] { b = lcs::estimate_pairwise_elcs(mc_n, 4, trials, 11, lcs::Exec::parallel); });
    const bool ok = a.mean == b.mean && a.stddev == b.stddev;
    all_ok = all_ok && ok;
    row("estimate_pairwise_elcs", t_ser, t_ser, t_par, ok);
  }

  {
    lcs::GenSpec spec;
    spec.k = quick ? 8 : 16;
    spec.n = quick ? 100 : 300;
    spec.sigma = 4;
    spec.distribution = lcs::Distribution::uniform;
    spec.seed = 3;
    const lcs::Dataset d = lcs::generate(spec);
    lcs::Sequence a, b;
    const double t_ser = time_ms([&] { a = lcs::greedy(d, lcs::Exec::serial); });
    const double t_par = time_ms([&] { b = lcs::greedy(d, lcs::Exec::parallel); });
    const bool ok = a == b;
    all_ok = all_ok && ok;
    row("greedy (pair LCS matrix)", t_ser, t_ser, t_par, ok);
  }

  if (!all_ok) {
    std::printf("result mismatch between implementations\n");
    return 1;
  }
  return 0;
}
