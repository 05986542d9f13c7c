#include "lcs/reference.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>

namespace lcs::ref {

namespace {

int window_end(const Sequence& s, int front, int range) {
  return std::min(static_cast<int>(s.size()), front + range);
}

// First occurrence of c at or after `front` within the window, or -1.
int find_in_window(const Sequence& s, int front, int range, Symbol c) {
  const int end = window_end(s, front, range);
  for (int p = front; p < end; ++p)
    if (s[static_cast<std::size_t>(p)] == c) return p;
  return -1;
}

}  // namespace

Sequence deposit(const Dataset& d, const DepositionConfig& cfg) {
  if (cfg.search_range < 1) throw std::invalid_argument("search_range must be >= 1");
  const int k = d.k();
  const Symbol sigma = d.alphabet.size();
  const int L = cfg.search_range;

  std::vector<int> fronts(static_cast<std::size_t>(k), 0);
  Sequence out;
  std::int64_t steps = 0;
  const std::int64_t cap = d.total_len() + 1;

  auto all_unfinished = [&] {
    for (int i = 0; i < k; ++i)
      if (fronts[static_cast<std::size_t>(i)] >=
          static_cast<int>(d.sequences[static_cast<std::size_t>(i)].size()))
        return false;
    return true;
  };
  auto front_symbol = [&](int i) {
    return d.sequences[static_cast<std::size_t>(i)]
                      [static_cast<std::size_t>(fronts[static_cast<std::size_t>(i)])];
  };

  while (all_unfinished()) {
    if (++steps > cap) throw std::logic_error("deposition step did not advance any front");

    if (cfg.method == DepositionMethod::most_front) {
      std::vector<int> count(static_cast<std::size_t>(sigma), 0);
      for (int i = 0; i < k; ++i) ++count[static_cast<std::size_t>(front_symbol(i))];
      Symbol top = 0;
      for (Symbol s = 1; s < sigma; ++s)
        if (count[static_cast<std::size_t>(s)] > count[static_cast<std::size_t>(top)]) top = s;

      bool everywhere = true;
      for (int i = 0; i < k && everywhere; ++i)
        everywhere = find_in_window(d.sequences[static_cast<std::size_t>(i)],
                                    fronts[static_cast<std::size_t>(i)], L, top) >= 0;
      if (everywhere) {
        out.push_back(top);
        for (int i = 0; i < k; ++i) {
          const int p = find_in_window(d.sequences[static_cast<std::size_t>(i)],
                                       fronts[static_cast<std::size_t>(i)], L, top);
          fronts[static_cast<std::size_t>(i)] = p + 1;
        }
      } else {
        for (int i = 0; i < k; ++i)
          if (front_symbol(i) == top) ++fronts[static_cast<std::size_t>(i)];
      }
      continue;
    }

    // min_change
    Symbol best = -1;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    for (Symbol s = 0; s < sigma; ++s) {
      std::int64_t cost = 0;
      bool everywhere = true;
      for (int i = 0; i < k; ++i) {
        const int p = find_in_window(d.sequences[static_cast<std::size_t>(i)],
                                     fronts[static_cast<std::size_t>(i)], L, s);
        if (p < 0) {
          everywhere = false;
          break;
        }
        cost += p + 1 - fronts[static_cast<std::size_t>(i)];
      }
      if (everywhere && cost < best_cost) {
        best = s;
        best_cost = cost;
      }
    }
    if (best >= 0) {
      out.push_back(best);
      for (int i = 0; i < k; ++i) {
        const int p = find_in_window(d.sequences[static_cast<std::size_t>(i)],
                                     fronts[static_cast<std::size_t>(i)], L, best);
        fronts[static_cast<std::size_t>(i)] = p + 1;
      }
    } else {
      std::vector<int> count(static_cast<std::size_t>(sigma), 0);
      for (int i = 0; i < k; ++i) ++count[static_cast<std::size_t>(front_symbol(i))];
      Symbol rare = -1;
      for (Symbol s = 0; s < sigma; ++s) {
        const int c = count[static_cast<std::size_t>(s)];
        if (c > 0 && (rare < 0 || c < count[static_cast<std::size_t>(rare)])) rare = s;
      }
      for (int i = 0; i < k; ++i)
        if (front_symbol(i) == rare) ++fronts[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Sequence extend_ends(const Sequence& t, const Dataset& d) {
  const Symbol sigma = d.alphabet.size();
  Sequence cur = t;
  for (;;) {
    bool grew = false;
    for (Symbol s = 0; s < sigma && !grew; ++s) {
      Sequence cand = cur;
      cand.push_back(s);
      if (is_common_subsequence(cand, d)) {
        cur = std::move(cand);
        grew = true;
      }
    }
    if (grew) continue;
    for (Symbol s = 0; s < sigma && !grew; ++s) {
      Sequence cand;
      cand.reserve(cur.size() + 1);
      cand.push_back(s);
      cand.insert(cand.end(), cur.begin(), cur.end());
      if (is_common_subsequence(cand, d)) {
        cur = std::move(cand);
        grew = true;
      }
    }
    if (!grew) return cur;
  }
}

Sequence expand_runs(const Sequence& t, const Dataset& d) {
  Sequence cur = t;
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t j = 0;
    while (j < cur.size()) {
      const Symbol a = cur[j];
      std::size_t run_end = j;
      while (run_end < cur.size() && cur[run_end] == a) ++run_end;
      for (;;) {
        Sequence cand = cur;
        cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(j), a);
        if (!is_common_subsequence(cand, d)) break;
        cur = std::move(cand);
        ++run_end;
        changed = true;
      }
      j = run_end;
    }
  }
  return cur;
}

Sequence extend(const Sequence& t, const Dataset& d) {
  Sequence cur = t;
  for (;;) {
    Sequence grown = ref::extend_ends(ref::expand_runs(cur, d), d);
    if (grown == cur) return cur;
    cur = std::move(grown);
  }
}

SolveResult dea_solve(const Dataset& d, const DeaOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!opts.use_most_front && !opts.use_min_change)
    throw std::invalid_argument("at least one deposition method is required");
  const std::vector<int> ranges = opts.search_range
                                      ? std::vector<int>{*opts.search_range}
                                      : default_search_ranges(d.max_len());

  std::vector<Template> pool;
  std::set<Sequence> seen;
  auto add = [&](Template t) {
    if (seen.insert(t.body).second) pool.push_back(std::move(t));
  };
  for (int pass = 0; pass < 2; ++pass) {
    const bool mf = pass == 0;
    if ((mf && !opts.use_most_front) || (!mf && !opts.use_min_change)) continue;
    const DepositionMethod m = mf ? DepositionMethod::most_front : DepositionMethod::min_change;
    for (int L : ranges) {
      TemplateOrigin origin;
      origin.kind = OriginKind::deposition;
      origin.method = m;
      origin.search_range = L;
      add(Template{ref::deposit(d, DepositionConfig{m, L}), origin});
    }
  }
  for (Symbol s = 0; s < d.alphabet.size(); ++s) {
    if (!is_common_subsequence(Sequence{s}, d)) continue;
    TemplateOrigin origin;
    origin.kind = OriginKind::basic;
    origin.symbol = s;
    add(Template{Sequence{s}, origin});
  }
  add(Template{Sequence{}, TemplateOrigin{}});

  std::vector<Sequence> grown(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) grown[i] = ref::extend(pool[i].body, d);

  std::size_t best = 0;
  for (std::size_t i = 1; i < grown.size(); ++i) {
    const Sequence& a = grown[i];
    const Sequence& b = grown[best];
    if (a.size() != b.size()) {
      if (a.size() > b.size()) best = i;
    } else if (a != b && a < b) {
      best = i;
    }
  }

  SolveResult res;
  res.cs = grown[best];
  res.length = static_cast<int>(res.cs.size());
  res.origin = pool[best].origin;
  if (res.origin.kind == OriginKind::deposition)
    res.search_range_used = res.origin.search_range;
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace lcs::ref
