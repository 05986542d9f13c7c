#include "lcs/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcs {

namespace {
constexpr std::string_view kPalette =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
    "!#$%&()*+,-./:;<=>?@[]^_`{|}~";
}

Alphabet::Alphabet(std::string glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.empty()) throw std::invalid_argument("alphabet must not be empty");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    auto b = static_cast<unsigned char>(glyphs_[i]);
    if (lookup_[b] != -1) throw std::invalid_argument("alphabet glyphs must be distinct");
    lookup_[b] = static_cast<Symbol>(i);
  }
}

Alphabet Alphabet::from_size(int sigma) {
  if (sigma < 1 || sigma > max_generated_size())
    throw std::invalid_argument("sigma must be in [1, " +
                                std::to_string(max_generated_size()) +
                                "] for a generated alphabet");
  return Alphabet(std::string(kPalette.substr(0, static_cast<std::size_t>(sigma))));
}

int Alphabet::max_generated_size() { return static_cast<int>(kPalette.size()); }

std::optional<Symbol> Alphabet::find(char c) const {
  Symbol s = lookup_[static_cast<unsigned char>(c)];
  if (s < 0) return std::nullopt;
  return s;
}

int Dataset::max_len() const {
  std::size_t m = 0;
  for (const auto& s : sequences) m = std::max(m, s.size());
  return static_cast<int>(m);
}

std::int64_t Dataset::total_len() const {
  std::int64_t t = 0;
  for (const auto& s : sequences) t += static_cast<std::int64_t>(s.size());
  return t;
}

Dataset Dataset::make(Alphabet alphabet, std::vector<Sequence> sequences) {
  if (sequences.empty()) throw std::invalid_argument("dataset needs at least one sequence");
  const Symbol sigma = alphabet.size();
  for (const auto& s : sequences)
    for (Symbol sym : s)
      if (sym < 0 || sym >= sigma)
        throw std::invalid_argument("sequence symbol outside the alphabet");
  return Dataset{std::move(alphabet), std::move(sequences)};
}

bool is_subsequence(const Sequence& t, const Sequence& s) {
  std::size_t i = 0;
  for (std::size_t j = 0; i < t.size() && j < s.size(); ++j)
    if (s[j] == t[i]) ++i;
  return i == t.size();
}

bool is_common_subsequence(const Sequence& t, const Dataset& d) {
  for (const auto& s : d.sequences)
    if (!is_subsequence(t, s)) return false;
  return true;
}

AlphabetStats alphabet_content(const Dataset& d) {
  const std::int64_t total = d.total_len();
  if (total == 0) throw std::invalid_argument("empty dataset");
  std::vector<double> content(static_cast<std::size_t>(d.alphabet.size()), 0.0);
  for (const auto& s : d.sequences)
    for (Symbol sym : s) content[static_cast<std::size_t>(sym)] += 1.0;
  for (double& c : content) c /= static_cast<double>(total);
  return AlphabetStats{std::move(content)};
}

Sequence to_symbols(const Alphabet& a, std::string_view text) {
  Sequence out;
  out.reserve(text.size());
  for (char c : text) {
    auto s = a.find(c);
    if (!s) throw std::invalid_argument(std::string("glyph not in alphabet: '") + c + "'");
    out.push_back(*s);
  }
  return out;
}

std::string to_text(const Alphabet& a, const Sequence& s) {
  std::string out;
  out.reserve(s.size());
  for (Symbol sym : s) out.push_back(a.glyph(sym));
  return out;
}

Dataset dataset_from_strings(const std::vector<std::string>& rows,
                             std::string_view alphabet) {
  std::string glyphs(alphabet);
  if (glyphs.empty()) {
    bool seen[256] = {};
    for (const auto& r : rows)
      for (char c : r) {
        auto b = static_cast<unsigned char>(c);
        if (!seen[b]) {
          seen[b] = true;
          glyphs.push_back(c);
        }
      }
    if (glyphs.empty()) glyphs = "A";  // all-empty rows still need an alphabet
  }
  Alphabet a(glyphs);
  std::vector<Sequence> seqs;
  seqs.reserve(rows.size());
  for (const auto& r : rows) seqs.push_back(to_symbols(a, r));
  return Dataset::make(std::move(a), std::move(seqs));
}

}  // namespace lcs
