#include "lcs/occurrence.hpp"

namespace lcs {

OccurrenceIndex::OccurrenceIndex(const Dataset& d)
    : sigma_(static_cast<std::size_t>(d.alphabet.size())) {
  const int k = d.k();
  lens_.resize(static_cast<std::size_t>(k));
  next_.resize(static_cast<std::size_t>(k));
  prev_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const Sequence& s = d.sequences[static_cast<std::size_t>(i)];
    const int n = static_cast<int>(s.size());
    lens_[static_cast<std::size_t>(i)] = n;

    auto& nx = next_[static_cast<std::size_t>(i)];
    nx.assign(static_cast<std::size_t>(n + 1) * sigma_, 0);
    for (std::size_t c = 0; c < sigma_; ++c)
      nx[static_cast<std::size_t>(n) * sigma_ + c] = n;
    for (int pos = n - 1; pos >= 0; --pos) {
      auto* row = &nx[static_cast<std::size_t>(pos) * sigma_];
      const auto* above = &nx[static_cast<std::size_t>(pos + 1) * sigma_];
      for (std::size_t c = 0; c < sigma_; ++c) row[c] = above[c];
      row[static_cast<std::size_t>(s[static_cast<std::size_t>(pos)])] = pos;
    }

    auto& pv = prev_[static_cast<std::size_t>(i)];
    pv.assign(static_cast<std::size_t>(n + 1) * sigma_, -1);
    for (int pos = 1; pos <= n; ++pos) {
      auto* row = &pv[static_cast<std::size_t>(pos) * sigma_];
      const auto* below = &pv[static_cast<std::size_t>(pos - 1) * sigma_];
      for (std::size_t c = 0; c < sigma_; ++c) row[c] = below[c];
      row[static_cast<std::size_t>(s[static_cast<std::size_t>(pos - 1)])] = pos - 1;
    }
  }
}

}  // namespace lcs
