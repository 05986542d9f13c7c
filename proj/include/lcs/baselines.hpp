#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/core.hpp"
#include "lcs/parallel.hpp"

namespace lcs {

inline constexpr long long kDefaultCellBudget = 50'000'000;

struct budget_error : std::runtime_error {
  budget_error(std::string msg, unsigned long long cell_count)
      : std::runtime_error(std::move(msg)), cells(cell_count) {}
  unsigned long long cells;
};

// Longest single-symbol repetition common to all sequences.
struct LongRunResult {
  Symbol symbol = 0;
  int m = 0;
  Sequence cs;
};
LongRunResult long_run(const Dataset& d);

// Exact pairwise LCS via the full length table with a fixed traceback:
// prefer the diagonal on a match, otherwise skip a character of t before a
// character of s. lcs2_length is the O(min-space) two-row kernel used where
// only the length is needed; it always equals lcs2(s, t).size().
Sequence lcs2(const Sequence& s, const Sequence& t);
int lcs2_length(const Sequence& s, const Sequence& t);

// Exact k-way LCS by the k-dimensional table. Throws budget_error when
// prod(len_i + 1) exceeds cell_budget.
Sequence lcs_k(const Dataset& d, long long cell_budget = kDefaultCellBudget);

// Testing oracle: enumerate subsequences of the shortest sequence, longest
// first (index tuples in lexicographic order within a length), return the
// first common subsequence. Throws when the shortest sequence is longer than
// max_len.
Sequence brute_force_lcs(const Dataset& d, int max_len = 20);

// Iteratively replace the best pair (longest pairwise LCS, ties to the
// smallest index pair) by its LCS until one sequence is left.
Sequence greedy(const Dataset& d, Exec exec = Exec::parallel);

// Rounds of adjacent pairing (1,2)(3,4)... with an odd leftover passing
// through; each pair is replaced by its LCS.
Sequence tournament(const Dataset& d, Exec exec = Exec::parallel);

struct BoundsReport {
  int upper_bound = 0;
  std::vector<int> chosen_sequence_indices;
  std::optional<int> exact;  // full-dataset LCS length when within budget
};

// Upper bound on the k-way LCS length from the exact LCS of a small chosen
// subset: walk symbols by descending content, give each the not-yet-chosen
// sequence holding it most, stop at min(|alphabet|, k) sequences, then drop
// the last-chosen until the DP fits the budget (a 2-sequence subset always
// fits via the two-row kernel).
BoundsReport upper_bound(const Dataset& d, long long cell_budget = kDefaultCellBudget);

// prod(len_i + 1) over the picked sequences, clamped to clamp + 1 on overflow.
unsigned long long dp_cell_count(const Dataset& d, const std::vector<int>& indices,
                                 unsigned long long clamp);

}  // namespace lcs
