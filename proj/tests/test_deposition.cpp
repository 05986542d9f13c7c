#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcs/baselines.hpp"
#include "lcs/deposition.hpp"
#include "lcs/reference.hpp"
#include "oracles.hpp"

using namespace lcs;

namespace {
constexpr auto MF = DepositionMethod::most_front;
constexpr auto MC = DepositionMethod::min_change;
}  // namespace

TEST_CASE("identical sequences deposit completely") {
  const Dataset d = dataset_from_strings({"ACGT", "ACGT"}, "ACGT");
  CHECK(deposit(d, {MF, 4}) == oracle::seq(d, "ACGT"));
  CHECK(deposit(d, {MC, 4}) == oracle::seq(d, "ACGT"));
}

TEST_CASE("disjoint sequences deposit nothing") {
  const Dataset d = dataset_from_strings({"AA", "BB"}, "AB");
  for (int L : {1, 2, 5}) {
    CHECK(deposit(d, {MF, L}).empty());
    CHECK(deposit(d, {MC, L}).empty());
  }
}

TEST_CASE("step-by-step trace on a three-symbol pair") {
  // Both methods settle on "AC"; brute force confirms the optimum is 2.
  const Dataset d = dataset_from_strings({"BAC", "ABC"}, "ABC");
  CHECK(oracle::text(d, deposit(d, {MF, 3})) == "AC");
  CHECK(oracle::text(d, deposit(d, {MC, 3})) == "AC");
  CHECK(brute_force_lcs(d).size() == 2);
}

TEST_CASE("datasets containing an empty sequence deposit nothing") {
  const Dataset d = Dataset::make(Alphabet("AB"), {Sequence{}, Sequence{0, 1}});
  CHECK(deposit(d, {MF, 3}).empty());
  CHECK(deposit(d, {MC, 3}).empty());
}

TEST_CASE("search_range must be positive") {
  const Dataset d = dataset_from_strings({"AB"}, "AB");
  CHECK_THROWS_AS(deposit(d, {MF, 0}), std::invalid_argument);
}

TEST_CASE("deposit outputs are common subsequences and deterministic") {
  SplitMix64 rng(53);
  for (int iter = 0; iter < 150; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(4));
    const Dataset d = oracle::random_dataset(rng, 6, 0, 30, sigma);
    const int L = 1 + static_cast<int>(rng.below(12));
    for (auto method : {MF, MC}) {
      const Sequence t = deposit(d, {method, L});
      CHECK(is_common_subsequence(t, d));
      CHECK(deposit(d, {method, L}) == t);
    }
  }
}

TEST_CASE("window clamps at the sequence end") {
  SplitMix64 rng(59);
  for (int iter = 0; iter < 80; ++iter) {
    const Dataset d = oracle::random_dataset(rng, 5, 1, 25, 3);
    const int n = d.max_len();
    for (auto method : {MF, MC}) {
      const Sequence at_n = deposit(d, {method, n});
      CHECK(deposit(d, {method, n + 7}) == at_n);
      CHECK(deposit(d, {method, 10 * n + 1}) == at_n);
    }
  }
}

TEST_CASE("most_front recovers identical datasets in full") {
  SplitMix64 rng(61);
  for (int iter = 0; iter < 40; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(3));
    const Sequence base = oracle::random_sequence(rng, 1 + static_cast<int>(rng.below(25)), sigma);
    const int k = 1 + static_cast<int>(rng.below(5));
    const Dataset d = Dataset::make(Alphabet::from_size(sigma),
                               std::vector<Sequence>(static_cast<std::size_t>(k), base));
    CHECK(deposit(d, {MF, 1 + static_cast<int>(rng.below(10))}) == base);
  }
}

TEST_CASE("table-driven deposit matches the reference implementation") {
  SplitMix64 rng(67);
  for (int iter = 0; iter < 200; ++iter) {
    const int sigma = 2 + static_cast<int>(rng.below(4));
    const Dataset d = oracle::random_dataset(rng, 6, 0, 25, sigma);
    const int L = 1 + static_cast<int>(rng.below(10));
    for (auto method : {MF, MC}) {
      CHECK(deposit(d, {method, L}) == ref::deposit(d, {method, L}));
    }
  }
}
