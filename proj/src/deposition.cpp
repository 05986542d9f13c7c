#include "lcs/deposition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lcs {

namespace {

// Shared step scaffolding: fronts all start at 0 and the loop exits as soon
// as any sequence is fully consumed.
struct Loop {
  const Dataset& d;
  const OccurrenceIndex& occ;
  const int k;
  const int sigma;
  const int range;
  FrontState st;
  std::int64_t step_cap;

  Loop(const Dataset& dd, const OccurrenceIndex& oo, int L)
      : d(dd), occ(oo), k(dd.k()), sigma(dd.alphabet.size()), range(L) {
    st.fronts.assign(static_cast<std::size_t>(k), 0);
    step_cap = dd.total_len() + 1;
  }

  int front(int i) const { return st.fronts[static_cast<std::size_t>(i)]; }
  Symbol front_symbol(int i) const {
    return d.sequences[static_cast<std::size_t>(i)][static_cast<std::size_t>(front(i))];
  }
  // Exclusive end of the search window of sequence i.
  int window_end(int i) const { return std::min(occ.len(i), front(i) + range); }
  bool in_window(int i, Symbol s) const {
    return occ.next(i, front(i), s) < window_end(i);
  }

  bool all_unfinished() const {
    for (int i = 0; i < k; ++i)
      if (front(i) >= occ.len(i)) return false;
    return true;
  }

  void tick() {
    if (++st.step > step_cap)
      throw std::logic_error("deposition step did not advance any front");
  }

  // Advance by one the front of every sequence whose front character is s.
  void nudge_fronts_holding(Symbol s) {
    for (int i = 0; i < k; ++i)
      if (front_symbol(i) == s) ++st.fronts[static_cast<std::size_t>(i)];
  }

  // Jump every front past the first in-window occurrence of s.
  void consume_everywhere(Symbol s) {
    for (int i = 0; i < k; ++i)
      st.fronts[static_cast<std::size_t>(i)] = occ.next(i, front(i), s) + 1;
  }
};

Sequence deposit_most_front(const Dataset& d, const OccurrenceIndex& occ, int L) {
  Loop lp(d, occ, L);
  Sequence out;
  std::vector<int> count(static_cast<std::size_t>(lp.sigma));
  while (lp.all_unfinished()) {
    lp.tick();
    std::fill(count.begin(), count.end(), 0);
    for (int i = 0; i < lp.k; ++i) ++count[static_cast<std::size_t>(lp.front_symbol(i))];
    Symbol top = 0;
    for (Symbol s = 1; s < lp.sigma; ++s)
      if (count[static_cast<std::size_t>(s)] > count[static_cast<std::size_t>(top)]) top = s;

    bool everywhere = true;
    for (int i = 0; i < lp.k && everywhere; ++i) everywhere = lp.in_window(i, top);
    if (everywhere) {
      out.push_back(top);
      lp.consume_everywhere(top);
    } else {
      lp.nudge_fronts_holding(top);
    }
  }
  return out;
}

Sequence deposit_min_change(const Dataset& d, const OccurrenceIndex& occ, int L) {
  Loop lp(d, occ, L);
  Sequence out;
  std::vector<int> count(static_cast<std::size_t>(lp.sigma));
  while (lp.all_unfinished()) {
    lp.tick();
    // Candidates are symbols present in every window; acceptance cost is the
    // total front movement sum(p_i + 1 - f_i).
    Symbol best = -1;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    for (Symbol s = 0; s < lp.sigma; ++s) {
      std::int64_t cost = 0;
      bool everywhere = true;
      for (int i = 0; i < lp.k; ++i) {
        const int p = occ.next(i, lp.front(i), s);
        if (p >= lp.window_end(i)) {
          everywhere = false;
          break;
        }
        cost += p + 1 - lp.front(i);
      }
      if (everywhere && cost < best_cost) {
        best = s;
        best_cost = cost;
      }
    }
    if (best >= 0) {
      out.push_back(best);
      lp.consume_everywhere(best);
      continue;
    }
    // No symbol is in every window: advance the fronts holding the rarest
    // front symbol, the cheapest move that is guaranteed to make progress.
    std::fill(count.begin(), count.end(), 0);
    for (int i = 0; i < lp.k; ++i) ++count[static_cast<std::size_t>(lp.front_symbol(i))];
    Symbol rare = -1;
    for (Symbol s = 0; s < lp.sigma; ++s) {
      const int c = count[static_cast<std::size_t>(s)];
      if (c > 0 && (rare < 0 || c < count[static_cast<std::size_t>(rare)])) rare = s;
    }
    lp.nudge_fronts_holding(rare);
  }
  return out;
}

}  // namespace

Sequence deposit(const Dataset& d, const DepositionConfig& cfg,
                 const OccurrenceIndex& occ) {
  if (cfg.search_range < 1) throw std::invalid_argument("search_range must be >= 1");
  return cfg.method == DepositionMethod::most_front
             ? deposit_most_front(d, occ, cfg.search_range)
             : deposit_min_change(d, occ, cfg.search_range);
}

Sequence deposit(const Dataset& d, const DepositionConfig& cfg) {
  OccurrenceIndex occ(d);
  return deposit(d, cfg, occ);
}

const char* method_name(DepositionMethod m) {
  return m == DepositionMethod::most_front ? "mf" : "mc";
}

}  // namespace lcs
