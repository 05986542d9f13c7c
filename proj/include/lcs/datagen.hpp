#pragma once

#include <cstdint>

#include "lcs/core.hpp"

namespace lcs {

enum class Distribution { uniform, random_contents, beta_skew };

// Description of one simulated dataset. random_contents draws one symbol
// probability vector per dataset (shared by its sequences); beta_skew is the
// 4-symbol split {beta/2, beta/2, (1-beta)/2, (1-beta)/2}.
struct GenSpec {
  int k = 1;
  int n = 1;
  int sigma = 1;
  Distribution distribution = Distribution::uniform;
  double beta = 0.5;  // beta_skew only
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument naming the offending field.
void validate(const GenSpec& spec);

// Deterministic: the same spec produces bit-identical sequences on every
// platform (fixed splitmix64 stream, fixed draw order).
Dataset generate(const GenSpec& spec);

const char* distribution_name(Distribution d);

}  // namespace lcs
