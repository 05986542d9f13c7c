#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcs/core.hpp"
#include "lcs/deposition.hpp"
#include "lcs/occurrence.hpp"
#include "lcs/parallel.hpp"

namespace lcs {

enum class OriginKind { deposition, basic, empty };

struct TemplateOrigin {
  OriginKind kind = OriginKind::empty;
  DepositionMethod method = DepositionMethod::most_front;  // deposition only
  int search_range = 0;                                    // deposition only
  Symbol symbol = -1;                                      // basic only

  std::string describe(const Alphabet& a) const;
};

struct Template {
  Sequence body;
  TemplateOrigin origin;
};

// Deduplicated-by-body candidate set: deposition outputs for each method and
// search range, one single-symbol template per symbol common to all
// sequences, and the empty template.
struct TemplatePool {
  std::vector<Template> templates;
};

struct SolveResult {
  Sequence cs;
  int length = 0;
  TemplateOrigin origin;
  std::optional<int> search_range_used;
  double elapsed_ms = 0.0;
};

struct DeaOptions {
  std::optional<int> search_range;  // replaces the default sweep when set
  bool use_most_front = true;
  bool use_min_change = true;
  Exec exec = Exec::parallel;
};

// The default search-range sweep: L = min(50, ceil(max_len / i)) for
// i = 1..10, clamped to >= 1, first occurrence kept.
std::vector<int> default_search_ranges(int max_len);

TemplatePool build_pool(const Dataset& d, const std::vector<int>& search_ranges);

// Grows a template at its ends: repeatedly scan right end then left end,
// symbols in alphabet order, accept the first insertion that stays a common
// subsequence and restart the scan.
Sequence extend_ends(const Sequence& t, const Dataset& d);
Sequence extend_ends(const Sequence& t, const Dataset& d, const OccurrenceIndex& occ);

// Grows maximal runs left to right, one extra copy at a time while the whole
// string stays a common subsequence; whole-string passes repeat until a pass
// changes nothing.
Sequence expand_runs(const Sequence& t, const Dataset& d);
Sequence expand_runs(const Sequence& t, const Dataset& d, const OccurrenceIndex& occ);

// Alternates expand_runs and extend_ends to a fixed point. Run expansion
// goes first: applied to a single-symbol template it reaches the full
// longest run before end insertions can mix in other symbols, which is what
// makes dea_solve never worse than long_run.
Sequence extend(const Sequence& t, const Dataset& d);
Sequence extend(const Sequence& t, const Dataset& d, const OccurrenceIndex& occ);

// Full solver: sweep search ranges, build the pool, extend every template
// (in parallel), return the longest result. Ties go to the lexicographically
// smallest body, then to pool order (most_front deposits, min_change
// deposits, basics, empty).
SolveResult dea_solve(const Dataset& d, const DeaOptions& opts = {});

}  // namespace lcs
