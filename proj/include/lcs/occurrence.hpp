#pragma once

#include <cstdint>
#include <vector>

#include "lcs/core.hpp"

namespace lcs {

// Per-sequence occurrence tables: next(i, pos, s) is the first index >= pos
// of symbol s in sequence i (len(i) when absent), prev(i, pos, s) the last
// index < pos (-1 when absent). Built once per dataset, O(k * n * sigma)
// space, and shared read-only by the deposition and extension kernels.
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const Dataset& d);

  int next(int i, int pos, Symbol s) const {
    return next_[static_cast<std::size_t>(i)]
                [static_cast<std::size_t>(pos) * sigma_ + static_cast<std::size_t>(s)];
  }
  int prev(int i, int pos, Symbol s) const {
    return prev_[static_cast<std::size_t>(i)]
                [static_cast<std::size_t>(pos) * sigma_ + static_cast<std::size_t>(s)];
  }
  int len(int i) const { return lens_[static_cast<std::size_t>(i)]; }
  int sigma() const { return static_cast<int>(sigma_); }

 private:
  std::size_t sigma_;
  std::vector<int> lens_;
  std::vector<std::vector<std::int32_t>> next_;
  std::vector<std::vector<std::int32_t>> prev_;
};

}  // namespace lcs
