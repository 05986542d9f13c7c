#pragma once

#include <cstdint>
#include <vector>

#include "lcs/core.hpp"
#include "lcs/occurrence.hpp"

namespace lcs {

// The two front-advancing strategies: pick the symbol held by the most
// fronts, or the in-every-window symbol whose acceptance moves the fronts
// least.
enum class DepositionMethod { most_front, min_change };

struct DepositionConfig {
  DepositionMethod method = DepositionMethod::most_front;
  int search_range = 1;  // window width L in characters, >= 1
};

// Per-sequence count of characters already consumed, plus the step counter.
struct FrontState {
  std::vector<int> fronts;
  std::int64_t step = 0;
};

// Builds a template: a common subsequence grown by repeatedly scanning the
// L-character window past each front. Runs while every front is strictly
// inside its sequence; every step advances at least one front.
Sequence deposit(const Dataset& d, const DepositionConfig& cfg);
Sequence deposit(const Dataset& d, const DepositionConfig& cfg,
                 const OccurrenceIndex& occ);

const char* method_name(DepositionMethod m);

}  // namespace lcs
