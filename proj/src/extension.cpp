#include "lcs/extension.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace lcs {

namespace {

[[noreturn]] void throw_not_cs() {
  throw std::invalid_argument("template is not a common subsequence of the dataset");
}

// Greedy embedding endpoints of the current template in every sequence.
// fwd[i] is the position after the leftmost greedy match of the whole
// template; bwd[i] the start of the rightmost greedy match. A symbol can be
// appended iff it occurs at or after fwd[i] in every sequence, prepended iff
// it occurs before bwd[i] in every sequence.
class EndsState {
 public:
  EndsState(const Dataset& d, const OccurrenceIndex& occ)
      : occ_(occ), k_(d.k()), fwd_(static_cast<std::size_t>(k_)),
        bwd_(static_cast<std::size_t>(k_)) {}

  void rebuild_forward(const Sequence& t) {
    for (int i = 0; i < k_; ++i) {
      int e = 0;
      for (Symbol c : t) {
        const int p = occ_.next(i, e, c);
        if (p >= occ_.len(i)) throw_not_cs();
        e = p + 1;
      }
      fwd_[static_cast<std::size_t>(i)] = e;
    }
    fwd_ok_ = true;
  }

  void rebuild_backward(const Sequence& t) {
    for (int i = 0; i < k_; ++i) {
      int b = occ_.len(i);
      for (auto it = t.rbegin(); it != t.rend(); ++it) {
        b = occ_.prev(i, b, *it);
        if (b < 0) throw_not_cs();
      }
      bwd_[static_cast<std::size_t>(i)] = b;
    }
    bwd_ok_ = true;
  }

  bool forward_ok() const { return fwd_ok_; }
  bool backward_ok() const { return bwd_ok_; }

  bool can_append(Symbol s) const {
    for (int i = 0; i < k_; ++i)
      if (occ_.next(i, fwd_[static_cast<std::size_t>(i)], s) >= occ_.len(i)) return false;
    return true;
  }

  bool can_prepend(Symbol s) const {
    for (int i = 0; i < k_; ++i)
      if (occ_.prev(i, bwd_[static_cast<std::size_t>(i)], s) < 0) return false;
    return true;
  }

  void on_append(Symbol s) {
    for (int i = 0; i < k_; ++i) {
      auto& e = fwd_[static_cast<std::size_t>(i)];
      e = occ_.next(i, e, s) + 1;
    }
    bwd_ok_ = false;
  }

  void on_prepend(Symbol s) {
    for (int i = 0; i < k_; ++i) {
      auto& b = bwd_[static_cast<std::size_t>(i)];
      b = occ_.prev(i, b, s);
    }
    fwd_ok_ = false;
  }

 private:
  const OccurrenceIndex& occ_;
  int k_;
  std::vector<int> fwd_, bwd_;
  bool fwd_ok_ = false;
  bool bwd_ok_ = false;
};

// Prefix/suffix embedding tables for in-place insertion. F[i][j] is the end
// of the leftmost greedy match of t[0..j) in sequence i, B[i][j] the start of
// the rightmost greedy match of t[j..). Inserting symbol a at position j
// keeps the string a common subsequence iff every sequence has an occurrence
// of a in [F[i][j], B[i][j]).
class SpliceTables {
 public:
  SpliceTables(const Dataset& d, const OccurrenceIndex& occ)
      : occ_(occ), k_(d.k()) {}

  void rebuild(const Sequence& t) {
    const std::size_t m = t.size();
    width_ = m + 1;
    F_.assign(static_cast<std::size_t>(k_) * width_, 0);
    B_.assign(static_cast<std::size_t>(k_) * width_, 0);
    for (int i = 0; i < k_; ++i) {
      auto* f = &F_[static_cast<std::size_t>(i) * width_];
      f[0] = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const int p = occ_.next(i, f[j], t[j]);
        if (p >= occ_.len(i)) throw_not_cs();
        f[j + 1] = p + 1;
      }
      auto* b = &B_[static_cast<std::size_t>(i) * width_];
      b[m] = occ_.len(i);
      for (std::size_t j = m; j > 0; --j) {
        b[j - 1] = occ_.prev(i, b[j], t[j - 1]);
        if (b[j - 1] < 0) throw_not_cs();
      }
    }
  }

  bool can_insert(std::size_t j, Symbol a) const {
    for (int i = 0; i < k_; ++i) {
      const auto* f = &F_[static_cast<std::size_t>(i) * width_];
      const auto* b = &B_[static_cast<std::size_t>(i) * width_];
      if (occ_.next(i, f[j], a) >= b[j]) return false;
    }
    return true;
  }

 private:
  const OccurrenceIndex& occ_;
  int k_;
  std::size_t width_ = 0;
  std::vector<int> F_, B_;
};

// Pool insertion order doubles as the origin tie-break order: most_front
// deposits, min_change deposits, basics, then the empty template.
TemplatePool build_pool_impl(const Dataset& d, const std::vector<int>& ranges,
                             bool use_mf, bool use_mc, const OccurrenceIndex& occ) {
  TemplatePool pool;
  std::set<Sequence> seen;
  auto add = [&](Template t) {
    if (seen.insert(t.body).second) pool.templates.push_back(std::move(t));
  };

  for (int pass = 0; pass < 2; ++pass) {
    const bool mf = pass == 0;
    if ((mf && !use_mf) || (!mf && !use_mc)) continue;
    const DepositionMethod m = mf ? DepositionMethod::most_front : DepositionMethod::min_change;
    for (int L : ranges) {
      TemplateOrigin origin;
      origin.kind = OriginKind::deposition;
      origin.method = m;
      origin.search_range = L;
      add(Template{deposit(d, DepositionConfig{m, L}, occ), origin});
    }
  }

  for (Symbol s = 0; s < d.alphabet.size(); ++s) {
    bool common = true;
    for (int i = 0; i < d.k() && common; ++i) common = occ.next(i, 0, s) < occ.len(i);
    if (!common) continue;
    TemplateOrigin origin;
    origin.kind = OriginKind::basic;
    origin.symbol = s;
    add(Template{Sequence{s}, origin});
  }

  add(Template{Sequence{}, TemplateOrigin{}});
  return pool;
}

}  // namespace

std::string TemplateOrigin::describe(const Alphabet& a) const {
  switch (kind) {
    case OriginKind::deposition:
      return std::string("deposition(") + method_name(method) +
             ",L=" + std::to_string(search_range) + ")";
    case OriginKind::basic:
      return std::string("basic(") + a.glyph(symbol) + ")";
    case OriginKind::empty:
      return "empty";
  }
  return "empty";
}

std::vector<int> default_search_ranges(int max_len) {
  std::vector<int> out;
  for (int i = 1; i <= 10; ++i) {
    const int L = std::max(1, std::min(50, (max_len + i - 1) / i));
    if (std::find(out.begin(), out.end(), L) == out.end()) out.push_back(L);
  }
  return out;
}

TemplatePool build_pool(const Dataset& d, const std::vector<int>& search_ranges) {
  if (search_ranges.empty()) throw std::invalid_argument("search_ranges must not be empty");
  OccurrenceIndex occ(d);
  return build_pool_impl(d, search_ranges, true, true, occ);
}

Sequence extend_ends(const Sequence& t, const Dataset& d, const OccurrenceIndex& occ) {
  const Symbol sigma = d.alphabet.size();
  Sequence cur = t;
  EndsState ends(d, occ);
  for (;;) {
    if (!ends.forward_ok()) ends.rebuild_forward(cur);
    Symbol hit = -1;
    for (Symbol s = 0; s < sigma && hit < 0; ++s)
      if (ends.can_append(s)) hit = s;
    if (hit >= 0) {
      cur.push_back(hit);
      ends.on_append(hit);
      continue;
    }
    if (!ends.backward_ok()) ends.rebuild_backward(cur);
    for (Symbol s = 0; s < sigma && hit < 0; ++s)
      if (ends.can_prepend(s)) hit = s;
    if (hit >= 0) {
      cur.insert(cur.begin(), hit);
      ends.on_prepend(hit);
      continue;
    }
    return cur;
  }
}

Sequence expand_runs(const Sequence& t, const Dataset& d, const OccurrenceIndex& occ) {
  if (t.empty()) return t;
  Sequence cur = t;
  SpliceTables tables(d, occ);
  bool changed = true;
  while (changed) {
    changed = false;
    tables.rebuild(cur);
    std::size_t j = 0;
    while (j < cur.size()) {
      const Symbol a = cur[j];
      std::size_t run_end = j;
      while (run_end < cur.size() && cur[run_end] == a) ++run_end;
      while (tables.can_insert(j, a)) {
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(j), a);
        ++run_end;
        changed = true;
        tables.rebuild(cur);
      }
      j = run_end;
    }
  }
  return cur;
}

Sequence extend(const Sequence& t, const Dataset& d, const OccurrenceIndex& occ) {
  Sequence cur = t;
  for (;;) {
    Sequence grown = extend_ends(expand_runs(cur, d, occ), d, occ);
    if (grown == cur) return cur;
    cur = std::move(grown);
  }
}

Sequence extend_ends(const Sequence& t, const Dataset& d) {
  OccurrenceIndex occ(d);
  return extend_ends(t, d, occ);
}

Sequence expand_runs(const Sequence& t, const Dataset& d) {
  OccurrenceIndex occ(d);
  return expand_runs(t, d, occ);
}

Sequence extend(const Sequence& t, const Dataset& d) {
  OccurrenceIndex occ(d);
  return extend(t, d, occ);
}

SolveResult dea_solve(const Dataset& d, const DeaOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!opts.use_most_front && !opts.use_min_change)
    throw std::invalid_argument("at least one deposition method is required");
  const std::vector<int> ranges = opts.search_range
                                      ? std::vector<int>{*opts.search_range}
                                      : default_search_ranges(d.max_len());
  for (int L : ranges)
    if (L < 1) throw std::invalid_argument("search_range must be >= 1");

  OccurrenceIndex occ(d);
  TemplatePool pool =
      build_pool_impl(d, ranges, opts.use_most_front, opts.use_min_change, occ);

  std::vector<Sequence> grown(pool.templates.size());
  for_each_index(pool.templates.size(), opts.exec,
                 [&](std::size_t i) { grown[i] = extend(pool.templates[i].body, d, occ); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < grown.size(); ++i) {
    const Sequence& a = grown[i];
    const Sequence& b = grown[best];
    if (a.size() != b.size()) {
      if (a.size() > b.size()) best = i;
    } else if (a != b && a < b) {
      best = i;
    }
    // equal bodies: keep the earlier pool entry (better origin rank)
  }

  SolveResult res;
  res.cs = grown[best];
  res.length = static_cast<int>(res.cs.size());
  res.origin = pool.templates[best].origin;
  if (res.origin.kind == OriginKind::deposition)
    res.search_range_used = res.origin.search_range;
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace lcs
