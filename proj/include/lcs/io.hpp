#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/core.hpp"

namespace lcs {

enum class InputFormat { fasta, lines, raw };

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line_no)
      : std::runtime_error(msg), line(line_no) {}
  int line;
};

struct ParseOptions {
  InputFormat format = InputFormat::lines;
  std::string alphabet;      // empty: infer glyphs in first-appearance order
  bool drop_unknown = false; // with a declared alphabet, drop foreign glyphs
  int truncate = 0;          // > 0: keep only the first `truncate` characters
};

// fasta: '>' lines start records, sequence lines are concatenated, letters
// uppercased, whitespace stripped. lines: one sequence per non-empty line.
// raw: each file is one sequence of byte symbols. Errors carry a line number.
Dataset parse_input(const std::vector<std::string>& paths, const ParseOptions& opt);

// Parsing core for one in-memory document (raw treats it as one sequence).
// Exposed for tests; `source` only labels error messages.
std::vector<std::string> parse_records(const std::string& text, InputFormat format,
                                       const std::string& source);

// One sequence per line, the emission format of the generator.
void write_lines(std::ostream& out, const Dataset& d);

InputFormat format_from_name(const std::string& name);

}  // namespace lcs
