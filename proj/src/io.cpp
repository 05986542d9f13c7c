#include "lcs/io.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lcs {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file: " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<std::string> parse_records(const std::string& text, InputFormat format,
                                       const std::string& source) {
  std::vector<std::string> records;
  if (format == InputFormat::raw) {
    records.push_back(text);
    return records;
  }

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool in_record = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (format == InputFormat::lines) {
      if (!line.empty()) records.push_back(line);
      continue;
    }
    // fasta
    if (!line.empty() && line[0] == '>') {
      records.emplace_back();
      in_record = true;
      continue;
    }
    std::string stripped;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c)))
        stripped.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (stripped.empty()) continue;
    if (!in_record)
      throw parse_error(source + ":" + std::to_string(line_no) +
                            ": sequence data before the first '>' header",
                        line_no);
    records.back() += stripped;
  }
  return records;
}

Dataset parse_input(const std::vector<std::string>& paths, const ParseOptions& opt) {
  if (paths.empty()) throw parse_error("no input files given", 0);

  std::vector<std::string> records;
  for (const auto& path : paths) {
    const std::string text = read_file(path);
    if (text.empty()) throw parse_error(path + ": empty input file", 0);
    auto part = parse_records(text, opt.format, path);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (records.empty()) throw parse_error("input contains no sequences", 0);

  if (opt.truncate > 0)
    for (auto& r : records)
      if (static_cast<int>(r.size()) > opt.truncate)
        r.resize(static_cast<std::size_t>(opt.truncate));

  std::string glyphs = opt.alphabet;
  const bool declared = !glyphs.empty();
  if (!declared) {
    bool seen[256] = {};
    for (const auto& r : records)
      for (char c : r) {
        auto b = static_cast<unsigned char>(c);
        if (!seen[b]) {
          seen[b] = true;
          glyphs.push_back(c);
        }
      }
    if (glyphs.empty()) glyphs = "A";
  }
  Alphabet alphabet(glyphs);

  std::vector<Sequence> seqs;
  seqs.reserve(records.size());
  for (std::size_t r = 0; r < records.size(); ++r) {
    Sequence s;
    s.reserve(records[r].size());
    for (char c : records[r]) {
      auto sym = alphabet.find(c);
      if (!sym) {
        if (declared && opt.drop_unknown) continue;
        throw parse_error("sequence " + std::to_string(r + 1) + ": symbol '" + c +
                              "' outside the declared alphabet",
                          static_cast<int>(r + 1));
      }
      s.push_back(*sym);
    }
    seqs.push_back(std::move(s));
  }
  return Dataset::make(std::move(alphabet), std::move(seqs));
}

void write_lines(std::ostream& out, const Dataset& d) {
  for (const auto& s : d.sequences) out << to_text(d.alphabet, s) << '\n';
}

InputFormat format_from_name(const std::string& name) {
  if (name == "fasta") return InputFormat::fasta;
  if (name == "lines") return InputFormat::lines;
  if (name == "raw") return InputFormat::raw;
  throw std::invalid_argument("unknown format: " + name);
}

}  // namespace lcs
