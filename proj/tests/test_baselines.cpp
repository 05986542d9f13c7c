#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lcs/baselines.hpp"
#include "oracles.hpp"

using namespace lcs;

namespace {

Dataset pair_dataset(const std::string& a, const std::string& b, const std::string& alpha) {
  return dataset_from_strings({a, b}, alpha);
}

}  // namespace

TEST_CASE("lcs2 examples") {
  const Dataset d = pair_dataset("ABCBDAB", "BDCABA", "ABCD");
  const Sequence s = oracle::seq(d, "ABCBDAB");
  const Sequence t = oracle::seq(d, "BDCABA");
  const Sequence r = lcs2(s, t);
  CHECK(r.size() == 4);
  CHECK(r.size() == brute_force_lcs(d).size());  // enumeration oracle
  CHECK(is_subsequence(r, s));
  CHECK(is_subsequence(r, t));

  CHECK(lcs2(s, s) == s);
  CHECK(lcs2(s, {}).empty());
  CHECK(lcs2({}, t).empty());
}

TEST_CASE("lcs2 length kernel matches the traceback table") {
  SplitMix64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const Sequence s = oracle::random_sequence(rng, static_cast<int>(rng.below(40)), sigma);
    const Sequence t = oracle::random_sequence(rng, static_cast<int>(rng.below(40)), sigma);
    const Sequence r = lcs2(s, t);
    CHECK(static_cast<int>(r.size()) == lcs2_length(s, t));
    CHECK(is_subsequence(r, s));
    CHECK(is_subsequence(r, t));
  }
}

TEST_CASE("lcs2 equals brute force on small pairs") {
  SplitMix64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const Sequence s = oracle::random_sequence(rng, static_cast<int>(rng.below(11)), sigma);
    const Sequence t = oracle::random_sequence(rng, static_cast<int>(rng.below(11)), sigma);
    const Dataset d = Dataset::make(Alphabet::from_size(sigma), {s, t});
    CHECK(lcs2(s, t).size() == brute_force_lcs(d).size());
  }
}

TEST_CASE("long_run examples") {
  {
    const auto r = long_run(dataset_from_strings({"aab", "aba", "baa"}, "ab"));
    CHECK(r.symbol == 0);
    CHECK(r.m == 2);
    CHECK(r.cs == Sequence{0, 0});
  }
  {
    const auto r = long_run(dataset_from_strings({"AB", "BA"}, "AB"));
    CHECK(r.symbol == 0);  // tie between A and B broken by alphabet order
    CHECK(r.m == 1);
  }
  {
    const auto r = long_run(dataset_from_strings({"A", "B"}, "AB"));
    CHECK(r.m == 0);
    CHECK(r.cs.empty());
    CHECK(r.symbol == 0);
  }
}

TEST_CASE("long_run maximality and monotonicity") {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 150; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    Dataset d = oracle::random_dataset(rng, 5, 0, 20, sigma);
    const auto r = long_run(d);
    CHECK(is_common_subsequence(r.cs, d));
    for (Symbol s = 0; s < d.alphabet.size(); ++s) {
      const Sequence over(static_cast<std::size_t>(r.m + 1), s);
      CHECK_FALSE(is_common_subsequence(over, d));
    }
    // appending a sequence never increases m
    Dataset extended = d;
    extended.sequences.push_back(oracle::random_sequence(rng, 10, sigma));
    CHECK(long_run(extended).m <= r.m);
  }
}

TEST_CASE("lcs_k examples") {
  {
    const Dataset d = dataset_from_strings({"ACGT", "ACGT", "ACGT"}, "ACGT");
    CHECK(lcs_k(d) == d.sequences[0]);
  }
  {
    const Dataset d = dataset_from_strings({"BAC", "ABC", "ACB"}, "ABC");
    CHECK(lcs_k(d).size() == 2);
    CHECK(brute_force_lcs(d).size() == 2);
  }
  {
    const Dataset d = pair_dataset("ABCBDAB", "BDCABA", "ABCD");
    CHECK(lcs_k(d) == lcs2(d.sequences[0], d.sequences[1]));
  }
}

TEST_CASE("lcs_k budget error carries the cell count") {
  const Dataset d = dataset_from_strings({"AAAAAAAA", "AAAAAAAA"}, "A");
  try {
    lcs_k(d, 10);
    FAIL("expected budget_error");
  } catch (const budget_error& e) {
    CHECK(e.cells > 10);
  }
}

TEST_CASE("lcs_k equals brute force on random small instances") {
  SplitMix64 rng(37);
  for (int iter = 0; iter < 200; ++iter) {
    const int sigma = 2 + 2 * static_cast<int>(rng.below(2));  // 2 or 4
    const Dataset d = oracle::random_dataset(rng, 3, 0, 10, sigma);
    const Sequence exact = lcs_k(d);
    CHECK(is_common_subsequence(exact, d));
    CHECK(exact.size() == brute_force_lcs(d).size());
  }
}

TEST_CASE("brute_force_lcs examples") {
  CHECK(brute_force_lcs(dataset_from_strings({"AB"}, "AB")) == Sequence{0, 1});
  CHECK(brute_force_lcs(dataset_from_strings({"BAC", "ABC", "ACB"}, "ABC")).size() == 2);
  CHECK(brute_force_lcs(dataset_from_strings({"AA", "BB"}, "AB")).empty());
  CHECK_THROWS_AS(
      brute_force_lcs(dataset_from_strings({"AAAAAAAAAAAAAAAAAAAAAAAAA"}, "A"), 20),
      std::invalid_argument);
}

TEST_CASE("greedy examples") {
  {
    const Dataset d = pair_dataset("ABCBDAB", "BDCABA", "ABCD");
    CHECK(greedy(d) == lcs2(d.sequences[0], d.sequences[1]));
  }
  {
    const Dataset d = dataset_from_strings({"AAA", "AAA", "AAA"}, "A");
    CHECK(greedy(d) == d.sequences[0]);
  }
  {
    const Dataset d = dataset_from_strings({"AB", "AB", "BA"}, "AB");
    CHECK(greedy(d).size() == 1);
  }
}

TEST_CASE("tournament examples") {
  {
    const Dataset d = pair_dataset("ABCBDAB", "BDCABA", "ABCD");
    CHECK(tournament(d) == lcs2(d.sequences[0], d.sequences[1]));
  }
  {
    const Dataset d = dataset_from_strings({"ACGT", "ACGT", "ACGT", "ACGT", "ACGT"}, "ACGT");
    CHECK(tournament(d) == d.sequences[0]);
  }
  {
    const Dataset d = dataset_from_strings({"BAC", "ABC", "ACB"}, "ABC");
    const Sequence r = tournament(d);
    CHECK(r.size() == 2);
    CHECK(is_common_subsequence(r, d));
  }
}

TEST_CASE("greedy and tournament outputs are common subsequences") {
  SplitMix64 rng(41);
  for (int iter = 0; iter < 80; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const Dataset d = oracle::random_dataset(rng, 6, 0, 25, sigma);
    CHECK(is_common_subsequence(greedy(d), d));
    CHECK(is_common_subsequence(tournament(d), d));
  }
}

TEST_CASE("upper_bound examples") {
  {
    const Dataset d = pair_dataset("ACGT", "TGCA", "ACGT");
    const auto r = upper_bound(d);
    CHECK(r.chosen_sequence_indices.size() == 2);
    CHECK(r.upper_bound == static_cast<int>(lcs2(d.sequences[0], d.sequences[1]).size()));
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == r.upper_bound);
  }
  {
    const Dataset d = dataset_from_strings({"BAC", "ABC", "ACB"}, "ABC");
    const auto r = upper_bound(d);
    CHECK(r.upper_bound >= 2);
    CHECK(r.upper_bound == 2);  // all three sequences are chosen, bound is exact
  }
}

TEST_CASE("upper_bound is sound, with and without budget pressure") {
  SplitMix64 rng(43);
  for (int iter = 0; iter < 150; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const Dataset d = oracle::random_dataset(rng, 4, 1, 10, sigma);
    const int exact = static_cast<int>(brute_force_lcs(d).size());
    CHECK(upper_bound(d).upper_bound >= exact);
    // a budget of one cell forces the subset down to two sequences
    const auto tight = upper_bound(d, 1);
    CHECK(tight.upper_bound >= exact);
    CHECK(tight.chosen_sequence_indices.size() <= 2);
  }
}

TEST_CASE("ratio bound: exact within sigma times the long run") {
  SplitMix64 rng(47);
  int tested = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const Dataset d = oracle::random_dataset(rng, 4, 1, 9, sigma);
    const auto lr = long_run(d);
    if (lr.m == 0) continue;  // no common symbol
    ++tested;
    const int exact = static_cast<int>(brute_force_lcs(d).size());
    CHECK(exact <= sigma * std::max(1, lr.m));
  }
  CHECK(tested > 50);
}
