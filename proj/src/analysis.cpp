#include "lcs/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/baselines.hpp"
#include "lcs/rng.hpp"

namespace lcs {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RatioReport performance_ratio(double reference_len, double cs_len) {
  require(reference_len >= 0, "reference_len must be >= 0");
  if (cs_len == 0) throw std::invalid_argument("empty CS has undefined ratio");
  require(cs_len > 0, "cs_len must be > 0");
  return RatioReport{reference_len, cs_len, reference_len / cs_len};
}

int range_lower_bound(int n, double expected_lcs) {
  require(n >= 1, "n must be >= 1");
  require(expected_lcs > 0, "expected_lcs must be > 0");
  return static_cast<int>(std::ceil(static_cast<double>(n) / expected_lcs));
}

double existence_probability(double r, int L, int k) {
  require(r > 0 && r < 1, "r must be in (0, 1)");
  require(L >= 1, "L must be >= 1");
  require(k >= 1, "k must be >= 1");
  return std::pow(1.0 - std::pow(1.0 - r, L), k);
}

double range_for_probability(double P, int k, double r) {
  require(P > 0 && P < 1, "P must be in (0, 1)");
  require(r > 0 && r < 1, "r must be in (0, 1)");
  require(k >= 1, "k must be >= 1");
  return std::log(1.0 - std::pow(P, 1.0 / k)) / std::log(1.0 - r);
}

double existence_probability_uniform(int sigma, int L, int k) {
  require(sigma >= 2, "sigma must be >= 2");
  require(L >= 1, "L must be >= 1");
  require(k >= 1, "k must be >= 1");
  const double miss = (sigma - 1.0) / sigma;
  return std::pow(1.0 - std::pow(miss, L), k);
}

double range_for_probability_uniform(double P, int k, int sigma) {
  require(P > 0 && P < 1, "P must be in (0, 1)");
  require(sigma >= 2, "sigma must be >= 2");
  require(k >= 1, "k must be >= 1");
  return std::log(1.0 - std::pow(P, 1.0 / k)) / std::log((sigma - 1.0) / sigma);
}

double expected_lcs_estimate(int n, int L) {
  require(L >= 1, "L must be >= 1");
  require(n >= L, "n must be >= L");
  return 2.0 * n / L - 1.0;
}

PairwiseLcsEstimate estimate_pairwise_elcs(int n, int sigma, int trials,
                                           std::uint64_t seed, Exec exec) {
  require(n >= 1, "n must be >= 1");
  require(sigma >= 1, "sigma must be >= 1");
  require(trials >= 1, "trials must be >= 1");

  std::vector<int> lengths(static_cast<std::size_t>(trials));
  for_each_index(static_cast<std::size_t>(trials), exec, [&](std::size_t t) {
    SplitMix64 rng(derive_seed(seed, t));
    Sequence a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (auto& c : a) c = static_cast<Symbol>(rng.below(static_cast<std::uint32_t>(sigma)));
    for (auto& c : b) c = static_cast<Symbol>(rng.below(static_cast<std::uint32_t>(sigma)));
    lengths[t] = lcs2_length(a, b);
  });

  double sum = 0;
  for (int l : lengths) sum += l;
  const double mean = sum / trials;
  double var = 0;
  for (int l : lengths) var += (l - mean) * (l - mean);
  const double stddev = trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0;
  return PairwiseLcsEstimate{mean, stddev};
}

}  // namespace lcs
