#include "lcs/datagen.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/rng.hpp"

namespace lcs {

void validate(const GenSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("k must be >= 1");
  if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
  if (spec.sigma < 1) throw std::invalid_argument("sigma must be >= 1");
  if (spec.sigma > Alphabet::max_generated_size())
    throw std::invalid_argument("sigma must be <= " +
                                std::to_string(Alphabet::max_generated_size()) +
                                " (single-glyph text alphabet)");
  if (spec.distribution == Distribution::beta_skew) {
    if (spec.sigma != 4) throw std::invalid_argument("sigma must be 4 for beta_skew");
    if (!(spec.beta > 0.0 && spec.beta < 1.0))
      throw std::invalid_argument("beta must be in (0, 1)");
  }
}

Dataset generate(const GenSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  const auto sigma = static_cast<std::uint32_t>(spec.sigma);

  // Cumulative symbol distribution; empty means uniform integer draws.
  std::vector<double> cum;
  if (spec.distribution == Distribution::random_contents) {
    std::vector<double> w(static_cast<std::size_t>(spec.sigma));
    double total = 0;
    for (auto& x : w) {
      x = rng.unit();
      total += x;
    }
    if (total == 0) total = 1;
    double acc = 0;
    for (double x : w) {
      acc += x / total;
      cum.push_back(acc);
    }
  } else if (spec.distribution == Distribution::beta_skew) {
    const double b2 = spec.beta / 2, r2 = (1.0 - spec.beta) / 2;
    cum = {b2, 2 * b2, 2 * b2 + r2, 1.0};
  }
  if (!cum.empty()) cum.back() = 1.0;

  auto draw = [&]() -> Symbol {
    if (cum.empty()) return static_cast<Symbol>(rng.below(sigma));
    const double u = rng.unit();
    for (std::size_t i = 0; i + 1 < cum.size(); ++i)
      if (u < cum[i]) return static_cast<Symbol>(i);
    return static_cast<Symbol>(cum.size() - 1);
  };

  std::vector<Sequence> seqs(static_cast<std::size_t>(spec.k));
  for (auto& s : seqs) {
    s.resize(static_cast<std::size_t>(spec.n));
    for (auto& c : s) c = draw();
  }
  return Dataset::make(Alphabet::from_size(spec.sigma), std::move(seqs));
}

const char* distribution_name(Distribution d) {
  switch (d) {
    case Distribution::uniform:
      return "uniform";
    case Distribution::random_contents:
      return "random";
    case Distribution::beta_skew:
      return "beta";
  }
  return "uniform";
}

}  // namespace lcs
