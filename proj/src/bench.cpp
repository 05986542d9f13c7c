#include "lcs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <tuple>

#include "lcs/extension.hpp"
#include "lcs/rng.hpp"

namespace lcs {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

AlgoResult run_dea(const Dataset& d, bool mf, bool mc, std::optional<int> L,
                   Exec exec) {
  DeaOptions opts;
  opts.use_most_front = mf;
  opts.use_min_change = mc;
  opts.search_range = L;
  opts.exec = exec;
  SolveResult r = dea_solve(d, opts);
  AlgoResult out;
  out.cs = std::move(r.cs);
  out.search_range_used = r.search_range_used;
  out.search_ranges = L ? std::vector<int>{*L} : default_search_ranges(d.max_len());
  out.method = mf && mc ? "mf+mc" : (mf ? "mf" : "mc");
  out.elapsed_ms = r.elapsed_ms;
  return out;
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {
      "dea",    "dea-mf", "dea-mc",     "dea-full-range",
      "longrun", "greedy", "tournament", "exact"};
  return names;
}

AlgoResult run_algorithm(const std::string& algo, const Dataset& d,
                         long long cell_budget, std::optional<int> search_range,
                         Exec exec) {
  Timer timer;
  if (algo == "dea") return run_dea(d, true, true, search_range, exec);
  if (algo == "dea-mf") return run_dea(d, true, false, search_range, exec);
  if (algo == "dea-mc") return run_dea(d, false, true, search_range, exec);
  if (algo == "dea-full-range")
    return run_dea(d, true, true, search_range.value_or(std::max(1, d.max_len())), exec);

  AlgoResult out;
  out.method = "n/a";
  if (algo == "longrun") {
    out.cs = long_run(d).cs;
  } else if (algo == "greedy") {
    out.cs = greedy(d, exec);
  } else if (algo == "tournament") {
    out.cs = tournament(d, exec);
  } else if (algo == "exact") {
    out.cs = lcs_k(d, cell_budget);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  out.elapsed_ms = timer.ms();
  return out;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.algos.empty()) throw std::invalid_argument("bench needs at least one algorithm");
  if (cfg.reps < 1) throw std::invalid_argument("reps must be >= 1");

  struct Job {
    std::optional<GenSpec> spec;  // generated dataset; otherwise file index
    std::size_t file_index = 0;
    std::string id;
    std::uint64_t seed = 0;
  };
  std::vector<Job> jobs;
  std::uint64_t counter = 0;
  for (const auto& st : cfg.settings) {
    for (int rep = 0; rep < cfg.reps; ++rep) {
      Job j;
      GenSpec spec;
      spec.k = st.k;
      spec.n = st.n;
      spec.sigma = st.sigma;
      spec.distribution = st.distribution;
      spec.beta = st.beta;
      spec.seed = derive_seed(cfg.seed, counter++);
      validate(spec);
      j.spec = spec;
      j.seed = spec.seed;
      j.id = "k" + std::to_string(st.k) + "_n" + std::to_string(st.n) + "_r" +
             std::to_string(rep);
      jobs.push_back(std::move(j));
    }
  }
  for (std::size_t f = 0; f < cfg.file_datasets.size(); ++f) {
    Job j;
    j.file_index = f;
    j.id = f < cfg.file_ids.size() ? cfg.file_ids[f] : "file" + std::to_string(f);
    j.seed = cfg.seed;
    jobs.push_back(std::move(j));
  }
  if (jobs.empty()) throw std::invalid_argument("bench has no datasets to run");

  std::vector<std::vector<BenchRow>> per_job(jobs.size());
  // Datasets run in parallel; each job's algorithms run in-order and any
  // nested solver parallelism collapses to serial inside the worker.
  for_each_index(jobs.size(), cfg.exec, [&](std::size_t ji) {
    const Job& job = jobs[ji];
    const Dataset dataset =
        job.spec ? generate(*job.spec) : cfg.file_datasets[job.file_index];
    for (const auto& algo : cfg.algos) {
      AlgoResult r = run_algorithm(algo, dataset, cfg.cell_budget, cfg.search_range,
                                   Exec::serial);
      BenchRow row;
      row.dataset_id = job.id;
      row.k = dataset.k();
      row.n = dataset.max_len();
      row.sigma = dataset.alphabet.size();
      row.algo = algo;
      row.cs_len = static_cast<int>(r.cs.size());
      row.valid = is_common_subsequence(r.cs, dataset);
      row.elapsed_ms = r.elapsed_ms;
      row.seed = job.seed;
      row.L_used = r.search_range_used;
      if (!row.valid)
        throw std::logic_error("algorithm " + algo +
                               " produced an invalid common subsequence on " + job.id);
      per_job[ji].push_back(std::move(row));
    }
  });

  std::vector<BenchRow> rows;
  for (auto& chunk : per_job)
    for (auto& row : chunk) rows.push_back(std::move(row));
  return rows;
}

std::string render_csv(const BenchConfig& cfg, const std::vector<BenchRow>& rows) {
  std::string out = "dataset_id,k,n,sigma,algo,cs_len,valid,elapsed_ms,seed,L_used\n";
  char buf[64];
  for (const auto& r : rows) {
    out += r.dataset_id;
    out += ',';
    out += std::to_string(r.k) + ',' + std::to_string(r.n) + ',' + std::to_string(r.sigma);
    out += ',';
    out += r.algo;
    out += ',' + std::to_string(r.cs_len);
    out += r.valid ? ",true" : ",false";
    if (cfg.timings) {
      std::snprintf(buf, sizeof buf, ",%.3f", r.elapsed_ms);
      out += buf;
    } else {
      out += ",na";
    }
    out += ',' + std::to_string(r.seed);
    out += ',';
    out += r.L_used ? std::to_string(*r.L_used) : "na";
    out += '\n';
  }

  // Per-(k, n, sigma, algo) summary in the table cell format "mean (stddev)".
  std::map<std::tuple<int, int, int, std::string>, std::vector<int>> groups;
  for (const auto& r : rows) groups[{r.k, r.n, r.sigma, r.algo}].push_back(r.cs_len);
  for (const auto& [key, lens] : groups) {
    double sum = 0;
    for (int l : lens) sum += l;
    const double mean = sum / static_cast<double>(lens.size());
    double var = 0;
    for (int l : lens) var += (l - mean) * (l - mean);
    const double sd =
        lens.size() > 1 ? std::sqrt(var / static_cast<double>(lens.size() - 1)) : 0.0;
    std::snprintf(buf, sizeof buf, "%.2f (%.2f)", mean, sd);
    out += "# summary,k=" + std::to_string(std::get<0>(key)) +
           ",n=" + std::to_string(std::get<1>(key)) +
           ",sigma=" + std::to_string(std::get<2>(key)) + ",algo=" + std::get<3>(key) +
           ",cs_len=" + buf + "\n";
  }
  return out;
}

}  // namespace lcs
