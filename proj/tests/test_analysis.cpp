#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcs/analysis.hpp"
#include "oracles.hpp"

using namespace lcs;

TEST_CASE("performance_ratio") {
  CHECK(performance_ratio(56.60, 29.05).ratio == doctest::Approx(1.948).epsilon(1e-3));
  CHECK(performance_ratio(10, 10).ratio == doctest::Approx(1.0));
  CHECK_THROWS_AS(performance_ratio(5, 0), std::invalid_argument);
}

TEST_CASE("range_lower_bound reproduces the tabulated lower bounds") {
  CHECK(range_lower_bound(100, 65.24) == 2);
  CHECK(range_lower_bound(25, 4.44) == 6);
  CHECK(range_lower_bound(77, 77) == 1);

  struct Row {
    int n;
    double elcs4, elcs20, elcs100;
  };
  const Row rows[] = {{25, 15.86, 8.75, 4.44},
                      {100, 65.24, 34.83, 18.05},
                      {500, 326.01, 180.56, 89.81},
                      {5000, 3268.26, 1819.85, 900.19}};
  for (const auto& r : rows) {
    CHECK(range_lower_bound(r.n, r.elcs4) == 2);
    CHECK(range_lower_bound(r.n, r.elcs20) == 3);
    CHECK(range_lower_bound(r.n, r.elcs100) == 6);
  }
}

TEST_CASE("existence_probability anchors") {
  CHECK(existence_probability(0.5, 1, 1) == doctest::Approx(0.5));
  CHECK(existence_probability(0.5, 11, 100) == doctest::Approx(0.95).epsilon(0.01));
  // monotone increasing in L toward 1
  double last = 0;
  for (int L = 1; L <= 64; L *= 2) {
    const double p = existence_probability(0.3, L, 50);
    CHECK(p > last);
    last = p;
  }
  CHECK(existence_probability(0.3, 512, 50) > 0.999);
}

TEST_CASE("range_for_probability anchors") {
  CHECK(range_for_probability(0.95, 100, 0.5) == doctest::Approx(10.93).epsilon(1e-3));
  CHECK(std::ceil(range_for_probability(0.95, 100, 0.5)) == 11);
  CHECK(std::ceil(range_for_probability(0.95, 100, 0.8)) == 5);
  CHECK(range_for_probability(0.05, 100, 0.5) == doctest::Approx(5.08).epsilon(1e-2));
}

TEST_CASE("uniform-content specials") {
  CHECK(existence_probability_uniform(2, 1, 1) == doctest::Approx(0.5));
  CHECK(existence_probability_uniform(4, 40, 5000) == doctest::Approx(0.95).epsilon(0.01));
  CHECK(range_for_probability_uniform(0.95, 5000, 4) == doctest::Approx(39.93).epsilon(1e-3));
  CHECK(range_for_probability_uniform(0.95, 250, 20) == doctest::Approx(165.56).epsilon(1e-3));
  CHECK(range_for_probability_uniform(0.5, 1, 2) == doctest::Approx(1.0));

  for (int sigma : {2, 4, 20, 100})
    for (int L : {1, 3, 10})
      for (int k : {1, 10, 500}) {
        const double a = existence_probability_uniform(sigma, L, k);
        const double b = existence_probability(1.0 / sigma, L, k);
        CHECK(std::abs(a - b) <= 1e-12);
      }
}

TEST_CASE("roundtrip between probability and range") {
  for (double r : {0.1, 0.25, 0.5, 0.8})
    for (double P : {0.05, 0.5, 0.95})
      for (int k : {1, 10, 100}) {
        const double L = range_for_probability(P, k, r);
        const int up = static_cast<int>(std::ceil(L));
        CHECK(existence_probability(r, std::max(1, up), k) >= P - 1e-9);
        const int down = static_cast<int>(std::floor(L));
        if (down >= 1) CHECK(existence_probability(r, down, k) <= P + 1e-9);
      }
  for (int sigma : {4, 20})
    for (double P : {0.05, 0.95})
      for (int k : {10, 250}) {
        const double L = range_for_probability_uniform(P, k, sigma);
        const int up = static_cast<int>(std::ceil(L));
        CHECK(existence_probability_uniform(sigma, std::max(1, up), k) >= P - 1e-9);
        const int down = static_cast<int>(std::floor(L));
        if (down >= 1) CHECK(existence_probability_uniform(sigma, down, k) <= P + 1e-9);
      }
}

TEST_CASE("existence probability monotonicity grid") {
  for (int L : {1, 2, 5})
    for (int k : {1, 5, 50}) {
      CHECK(existence_probability(0.3, L, k) < existence_probability(0.6, L, k));
      CHECK(existence_probability(0.3, L, k) < existence_probability(0.3, L + 1, k));
      CHECK(existence_probability(0.3, L, k + 1) < existence_probability(0.3, L, k));
    }
}

TEST_CASE("expected_lcs_estimate") {
  CHECK(expected_lcs_estimate(1000, 50) == doctest::Approx(39.0));
  CHECK(expected_lcs_estimate(64, 64) == doctest::Approx(1.0));
  CHECK(expected_lcs_estimate(100, 2) == doctest::Approx(99.0));
  CHECK_THROWS_AS(expected_lcs_estimate(10, 50), std::invalid_argument);
}

TEST_CASE("pairwise Monte Carlo estimator anchors") {
  // Frozen means from two independent implementations (this DP, which the
  // brute-force suite checks, and an external cross-check): 62.2 and 7.16.
  const auto four = estimate_pairwise_elcs(100, 4, 300, 12345);
  CHECK(std::abs(four.mean - 62.2) <= 1.0);
  const auto twenty = estimate_pairwise_elcs(25, 20, 300, 12345);
  CHECK(std::abs(twenty.mean - 7.16) <= 0.5);

  // The tabulated E(LCS) reference values are loose upper bounds; the
  // one-sigma upper estimate reproduces them and stays above the mean.
  CHECK(std::abs(four.upper_estimate() - 65.24) <= 2.0);
  CHECK(std::abs(twenty.upper_estimate() - 8.75) <= 1.0);
  CHECK(four.upper_estimate() > four.mean);
}

TEST_CASE("unary alphabet gives exactly n") {
  const auto e = estimate_pairwise_elcs(57, 1, 5, 9);
  CHECK(e.mean == doctest::Approx(57.0));
  CHECK(e.stddev == doctest::Approx(0.0));
}

TEST_CASE("estimator mean scales roughly linearly in n") {
  const auto a = estimate_pairwise_elcs(100, 4, 200, 7);
  const auto b = estimate_pairwise_elcs(200, 4, 200, 8);
  const double ra = a.mean / 100.0, rb = b.mean / 200.0;
  CHECK(std::abs(ra - rb) / rb <= 0.03);
}

TEST_CASE("estimator validates inputs") {
  CHECK_THROWS_AS(estimate_pairwise_elcs(0, 4, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_pairwise_elcs(10, 4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(existence_probability(1.0, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(range_for_probability(0.0, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(range_for_probability_uniform(0.95, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(range_lower_bound(5, 0.0), std::invalid_argument);
}
