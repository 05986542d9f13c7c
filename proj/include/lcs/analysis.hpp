#pragma once

#include <cstdint>

#include "lcs/parallel.hpp"

namespace lcs {

// reference_len / cs_len. The reference may itself be an averaged upper
// bound, so both operands are real-valued. Throws for cs_len == 0.
struct RatioReport {
  double reference_len = 0;
  double cs_len = 0;
  double ratio = 0;
};
RatioReport performance_ratio(double reference_len, double cs_len);

// Smallest search range that can cover a sequence of length n in
// expected_lcs deposition steps: ceil(n / expected_lcs).
int range_lower_bound(int n, double expected_lcs);

// Probability that a symbol of content r appears within the first L window
// characters of every one of k sequences: (1 - (1-r)^L)^k.
double existence_probability(double r, int L, int k);

// Search range achieving existence probability P for content r:
// log(1 - P^(1/k)) / log(1 - r). Real-valued; callers ceil for a window.
double range_for_probability(double P, int k, double r);

// Uniform-content specials: the two functions above at r = 1/sigma.
double existence_probability_uniform(int sigma, int L, int k);
double range_for_probability_uniform(double P, int k, int sigma);

// Expected LCS length when a common symbol is confidently found within L:
// 2n/L - 1.
double expected_lcs_estimate(int n, int L);

// Monte Carlo mean and sample standard deviation of the pairwise LCS length
// over `trials` pairs of uniform random sequences (length n, sigma symbols).
// Trial streams derive from (seed, trial index), so serial and parallel runs
// agree exactly.
struct PairwiseLcsEstimate {
  double mean = 0;
  double stddev = 0;

  // Loose upper estimate of the expected length: one standard deviation of
  // safety margin over the sample mean. This is the value the reference
  // E(LCS) upper-bound table tabulates.
  double upper_estimate() const { return mean + stddev; }
};
PairwiseLcsEstimate estimate_pairwise_elcs(int n, int sigma, int trials,
                                           std::uint64_t seed,
                                           Exec exec = Exec::parallel);

}  // namespace lcs
