#pragma once

#include "lcs/core.hpp"
#include "lcs/deposition.hpp"
#include "lcs/extension.hpp"

// Serial reference implementations: direct transcriptions of the step
// semantics using plain window scans and full common-subsequence checks, with
// no occurrence tables and no threading. They are kept as the ground truth
// for the optimized kernels; the test suite asserts byte-equal outputs and
// tools/bench_compare measures the gap.
namespace lcs::ref {

Sequence deposit(const Dataset& d, const DepositionConfig& cfg);
Sequence extend_ends(const Sequence& t, const Dataset& d);
Sequence expand_runs(const Sequence& t, const Dataset& d);
Sequence extend(const Sequence& t, const Dataset& d);
SolveResult dea_solve(const Dataset& d, const DeaOptions& opts = {});

}  // namespace lcs::ref
