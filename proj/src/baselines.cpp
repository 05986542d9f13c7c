#include "lcs/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>

namespace lcs {

LongRunResult long_run(const Dataset& d) {
  const Symbol sigma = d.alphabet.size();
  std::vector<int> min_count(static_cast<std::size_t>(sigma),
                             std::numeric_limits<int>::max());
  std::vector<int> count(static_cast<std::size_t>(sigma));
  for (const auto& s : d.sequences) {
    std::fill(count.begin(), count.end(), 0);
    for (Symbol c : s) ++count[static_cast<std::size_t>(c)];
    for (Symbol c = 0; c < sigma; ++c)
      min_count[static_cast<std::size_t>(c)] =
          std::min(min_count[static_cast<std::size_t>(c)], count[static_cast<std::size_t>(c)]);
  }
  LongRunResult res;
  for (Symbol c = 0; c < sigma; ++c) {
    if (min_count[static_cast<std::size_t>(c)] > res.m) {
      res.m = min_count[static_cast<std::size_t>(c)];
      res.symbol = c;
    }
  }
  res.cs.assign(static_cast<std::size_t>(res.m), res.symbol);
  return res;
}

int lcs2_length(const Sequence& s, const Sequence& t) {
  const std::size_t n = s.size(), m = t.size();
  std::vector<std::int32_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (s[i - 1] == t[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

Sequence lcs2(const Sequence& s, const Sequence& t) {
  const std::size_t n = s.size(), m = t.size();
  std::vector<std::int32_t> dp((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::int32_t& {
    return dp[i * (m + 1) + j];
  };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = (s[i - 1] == t[j - 1]) ? at(i - 1, j - 1) + 1
                                        : std::max(at(i - 1, j), at(i, j - 1));
  Sequence out;
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (s[i - 1] == t[j - 1] && at(i - 1, j - 1) + 1 == at(i, j)) {
      out.push_back(s[i - 1]);
      --i;
      --j;
    } else if (at(i, j - 1) == at(i, j)) {
      --j;
    } else {
      --i;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

unsigned long long dp_cell_count(const Dataset& d, const std::vector<int>& indices,
                                 unsigned long long clamp) {
  unsigned long long cells = 1;
  for (int idx : indices) {
    const unsigned long long dim =
        d.sequences[static_cast<std::size_t>(idx)].size() + 1;
    if (cells > (clamp + 1) / dim + 1) return clamp + 1;
    cells *= dim;
    if (cells > clamp) return clamp + 1;
  }
  return cells;
}

Sequence lcs_k(const Dataset& d, long long cell_budget) {
  const int k = d.k();
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 0);
  const auto budget = static_cast<unsigned long long>(std::max<long long>(cell_budget, 1));
  const unsigned long long cells = dp_cell_count(d, all, budget);
  if (cells > budget)
    throw budget_error("instance too large for exact DP (needs more than " +
                           std::to_string(budget) + " cells)",
                       cells);
  if (k == 1) return d.sequences[0];

  std::vector<std::size_t> dims(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) dims[static_cast<std::size_t>(i)] = d.sequences[static_cast<std::size_t>(i)].size() + 1;
  std::vector<std::size_t> stride(static_cast<std::size_t>(k));
  stride[static_cast<std::size_t>(k - 1)] = 1;
  for (int i = k - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] * dims[static_cast<std::size_t>(i + 1)];
  const std::size_t diag_step =
      std::accumulate(stride.begin(), stride.end(), std::size_t{0});

  // Lengths fit in 16 bits: the shortest dimension is at most
  // budget^(1/k) <= sqrt(budget) for k >= 2.
  std::vector<std::uint16_t> dp(static_cast<std::size_t>(cells), 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  for (std::size_t lin = 0; lin < dp.size(); ++lin) {
    bool boundary = false;
    for (int i = 0; i < k && !boundary; ++i) boundary = idx[static_cast<std::size_t>(i)] == 0;
    if (!boundary) {
      std::uint16_t best = 0;
      for (int i = 0; i < k; ++i)
        best = std::max(best, dp[lin - stride[static_cast<std::size_t>(i)]]);
      bool match = true;
      const Symbol c = d.sequences[0][idx[0] - 1];
      for (int i = 1; i < k && match; ++i)
        match = d.sequences[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)] - 1] == c;
      if (match)
        best = std::max(best, static_cast<std::uint16_t>(dp[lin - diag_step] + 1));
      dp[lin] = best;
    }
    // odometer increment, last dimension fastest
    for (int i = k - 1; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < dims[static_cast<std::size_t>(i)]) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }

  // Traceback mirrors lcs2: diagonal on a full match, otherwise release a
  // character of the last possible sequence first.
  Sequence out;
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = dims[static_cast<std::size_t>(i)] - 1;
  std::size_t lin = dp.size() - 1;
  for (;;) {
    bool interior = true;
    for (int i = 0; i < k && interior; ++i) interior = idx[static_cast<std::size_t>(i)] > 0;
    if (!interior || dp[lin] == 0) break;
    bool match = true;
    const Symbol c = d.sequences[0][idx[0] - 1];
    for (int i = 1; i < k && match; ++i)
      match = d.sequences[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)] - 1] == c;
    if (match && dp[lin - diag_step] + 1 == dp[lin]) {
      out.push_back(c);
      for (int i = 0; i < k; ++i) --idx[static_cast<std::size_t>(i)];
      lin -= diag_step;
      continue;
    }
    bool moved = false;
    for (int i = k - 1; i >= 0 && !moved; --i) {
      if (idx[static_cast<std::size_t>(i)] > 0 &&
          dp[lin - stride[static_cast<std::size_t>(i)]] == dp[lin]) {
        --idx[static_cast<std::size_t>(i)];
        lin -= stride[static_cast<std::size_t>(i)];
        moved = true;
      }
    }
    assert(moved);
    if (!moved) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Sequence brute_force_lcs(const Dataset& d, int max_len) {
  int shortest = 0;
  for (int i = 1; i < d.k(); ++i)
    if (d.sequences[static_cast<std::size_t>(i)].size() <
        d.sequences[static_cast<std::size_t>(shortest)].size())
      shortest = i;
  const Sequence& s = d.sequences[static_cast<std::size_t>(shortest)];
  const int m = static_cast<int>(s.size());
  if (m > max_len)
    throw std::invalid_argument("brute force guard exceeded: shortest sequence has " +
                                std::to_string(m) + " > " + std::to_string(max_len) +
                                " characters");
  for (int len = m; len >= 1; --len) {
    std::vector<int> pick(static_cast<std::size_t>(len));
    std::iota(pick.begin(), pick.end(), 0);
    Sequence cand(static_cast<std::size_t>(len));
    for (;;) {
      for (int j = 0; j < len; ++j)
        cand[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])];
      if (is_common_subsequence(cand, d)) return cand;
      // next index combination in lexicographic order
      int j = len - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - len + j) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int l = j + 1; l < len; ++l)
        pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
    }
  }
  return {};
}

Sequence greedy(const Dataset& d, Exec exec) {
  std::vector<Sequence> pool = d.sequences;
  std::vector<char> alive(pool.size(), 1);
  int remaining = static_cast<int>(pool.size());
  const std::size_t n = pool.size();

  // Pairwise LCS lengths, refreshed only for the merged sequence each round.
  std::vector<int> len(n * n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for_each_index(pairs.size(), exec, [&](std::size_t p) {
    auto [i, j] = pairs[p];
    len[i * n + j] = lcs2_length(pool[i], pool[j]);
  });

  while (remaining > 1) {
    std::size_t bi = 0, bj = 0;
    int best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        if (len[i * n + j] > best) {
          best = len[i * n + j];
          bi = i;
          bj = j;
        }
      }
    }
    pool[bi] = lcs2(pool[bi], pool[bj]);
    alive[bj] = 0;
    --remaining;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && i != bi) others.push_back(i);
    for_each_index(others.size(), exec, [&](std::size_t p) {
      const std::size_t i = others[p];
      const int l = lcs2_length(pool[std::min(i, bi)], pool[std::max(i, bi)]);
      len[std::min(i, bi) * n + std::max(i, bi)] = l;
    });
  }
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) return pool[i];
  return {};
}

Sequence tournament(const Dataset& d, Exec exec) {
  std::vector<Sequence> round = d.sequences;
  while (round.size() > 1) {
    const std::size_t pairs = round.size() / 2;
    std::vector<Sequence> next(pairs + (round.size() % 2));
    for_each_index(pairs, exec, [&](std::size_t p) {
      next[p] = lcs2(round[2 * p], round[2 * p + 1]);
    });
    if (round.size() % 2) next[pairs] = std::move(round.back());
    round = std::move(next);
  }
  return round[0];
}

BoundsReport upper_bound(const Dataset& d, long long cell_budget) {
  const int k = d.k();
  const Symbol sigma = d.alphabet.size();
  const auto budget = static_cast<unsigned long long>(std::max<long long>(cell_budget, 1));

  std::vector<std::vector<int>> count(
      static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(sigma), 0));
  std::vector<long long> total(static_cast<std::size_t>(sigma), 0);
  for (int i = 0; i < k; ++i)
    for (Symbol c : d.sequences[static_cast<std::size_t>(i)]) {
      ++count[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      ++total[static_cast<std::size_t>(c)];
    }

  std::vector<Symbol> order(static_cast<std::size_t>(sigma));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Symbol a, Symbol b) {
    return total[static_cast<std::size_t>(a)] > total[static_cast<std::size_t>(b)];
  });

  BoundsReport report;
  std::vector<char> taken(static_cast<std::size_t>(k), 0);
  const int want = std::min(static_cast<int>(sigma), k);
  for (Symbol c : order) {
    if (static_cast<int>(report.chosen_sequence_indices.size()) >= want) break;
    if (total[static_cast<std::size_t>(c)] == 0) continue;
    int best = -1;
    for (int i = 0; i < k; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      if (best < 0 || count[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] >
                          count[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)])
        best = i;
    }
    if (best < 0 || count[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)] == 0)
      continue;  // every holder of this symbol is already chosen
    taken[static_cast<std::size_t>(best)] = 1;
    report.chosen_sequence_indices.push_back(best);
  }
  if (report.chosen_sequence_indices.empty())
    report.chosen_sequence_indices.push_back(0);

  auto& chosen = report.chosen_sequence_indices;
  while (chosen.size() > 2 && dp_cell_count(d, chosen, budget) > budget)
    chosen.pop_back();

  if (chosen.size() == 1) {
    report.upper_bound =
        static_cast<int>(d.sequences[static_cast<std::size_t>(chosen[0])].size());
  } else if (chosen.size() == 2) {
    report.upper_bound = lcs2_length(d.sequences[static_cast<std::size_t>(chosen[0])],
                                     d.sequences[static_cast<std::size_t>(chosen[1])]);
  } else {
    std::vector<Sequence> sub;
    for (int idx : chosen) sub.push_back(d.sequences[static_cast<std::size_t>(idx)]);
    report.upper_bound = static_cast<int>(
        lcs_k(Dataset::make(d.alphabet, std::move(sub)), cell_budget).size());
  }

  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 0);
  if (dp_cell_count(d, all, budget) <= budget)
    report.exact = static_cast<int>(lcs_k(d, cell_budget).size());
  return report;
}

}  // namespace lcs
