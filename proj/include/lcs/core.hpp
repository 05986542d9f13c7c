#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcs {

// A symbol is an index into the dataset's alphabet. Dense integers keep the
// front tables compact and make comparisons O(1).
using Symbol = std::int32_t;
using Sequence = std::vector<Symbol>;

// Ordered set of distinct byte glyphs. The order is fixed at construction
// and is the tie-break order used by every algorithm downstream.
class Alphabet {
 public:
  explicit Alphabet(std::string glyphs);

  // Palette alphabet for generated datasets: 'A'..'Z', 'a'..'z', '0'..'9',
  // then punctuation. Throws for sigma outside [1, palette size].
  static Alphabet from_size(int sigma);
  static int max_generated_size();

  int size() const { return static_cast<int>(glyphs_.size()); }
  char glyph(Symbol s) const { return glyphs_[static_cast<std::size_t>(s)]; }
  std::optional<Symbol> find(char c) const;
  const std::string& glyphs() const { return glyphs_; }

  bool operator==(const Alphabet& o) const { return glyphs_ == o.glyphs_; }

 private:
  std::string glyphs_;
  std::array<Symbol, 256> lookup_;
};

// A problem instance: k >= 1 sequences over one shared alphabet.
struct Dataset {
  Alphabet alphabet;
  std::vector<Sequence> sequences;

  int k() const { return static_cast<int>(sequences.size()); }
  int max_len() const;
  std::int64_t total_len() const;

  // Validates k >= 1 and that every symbol indexes the alphabet.
  static Dataset make(Alphabet alphabet, std::vector<Sequence> sequences);
};

// Per-symbol fraction of all characters in the dataset; sums to 1.
struct AlphabetStats {
  std::vector<double> content;
};

// True iff t embeds in s keeping order (greedy left-to-right scan, O(|s|)).
bool is_subsequence(const Sequence& t, const Sequence& s);

bool is_common_subsequence(const Sequence& t, const Dataset& d);

// Throws std::invalid_argument on an all-empty dataset.
AlphabetStats alphabet_content(const Dataset& d);

// Text <-> symbol conversion. to_symbols throws on glyphs outside `a`.
Sequence to_symbols(const Alphabet& a, std::string_view text);
std::string to_text(const Alphabet& a, const Sequence& s);

// Convenience constructor used by tests and tools. With an empty `alphabet`
// the glyph order is first appearance across the rows.
Dataset dataset_from_strings(const std::vector<std::string>& rows,
                             std::string_view alphabet = {});

}  // namespace lcs
