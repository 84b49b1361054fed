#include "diffract/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace diffract::io {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string &what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos)
      break;
    text = text.substr(nl + 1);
  }
  // Trailing blank lines are tolerated.
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos)
    lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::size_t parse_index(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    parse_error(line, "expected a base-10 index, got '" + std::string(word) + "'");
  return value;
}

std::vector<Element> parse_row(std::string_view line, std::size_t width,
                               std::size_t lineno) {
  auto words = split_words(line);
  if (words.size() != width)
    parse_error(lineno, "expected " + std::to_string(width) + " entries, got " +
                            std::to_string(words.size()));
  std::vector<Element> row;
  row.reserve(width);
  for (auto w : words) {
    std::size_t v = parse_index(w, lineno);
    if (v >= width)
      parse_error(lineno, "index " + std::to_string(v) + " out of range");
    row.push_back(static_cast<Element>(v));
  }
  return row;
}

} // namespace

FiniteGroup parse_gtab(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty())
    parse_error(1, "empty file");
  auto head = split_words(lines[0]);
  if (head.size() != 1)
    parse_error(1, "expected the group order alone");
  const std::size_t n = parse_index(head[0], 1);
  if (n == 0)
    parse_error(1, "order must be positive");
  if (lines.size() != n + 1 && lines.size() != 2 * n + 1)
    parse_error(lines.size(), "expected " + std::to_string(n) + " table rows and an optional " +
                                  std::to_string(n) + "-line label block");

  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = parse_row(lines[i + 1], n, i + 2);
    table.insert(table.end(), row.begin(), row.end());
  }
  std::vector<std::string> labels;
  if (lines.size() == 2 * n + 1) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string_view line = lines[n + 1 + i];
      auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos)
        parse_error(n + 2 + i, "empty label");
      auto last = line.find_last_not_of(" \t");
      labels.emplace_back(line.substr(first, last - first + 1));
    }
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

std::string format_gtab(const FiniteGroup &g) {
  std::ostringstream os;
  const std::size_t n = g.order();
  os << n << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    auto row = g.row(static_cast<Element>(a));
    for (std::size_t b = 0; b < n; ++b)
      os << (b ? " " : "") << row[b];
    os << '\n';
  }
  for (const auto &l : g.labels())
    os << l << '\n';
  return os.str();
}

FiniteGroup parse_gens(std::string_view text, std::size_t cap) {
  auto lines = split_lines(text);
  if (lines.empty())
    parse_error(1, "empty file");
  auto head = split_words(lines[0]);
  std::size_t k = 0;
  if (head.size() == 2 && head[0] == "degree")
    k = parse_index(head[1], 1);
  else if (head.size() == 1)
    k = parse_index(head[0], 1);
  else
    parse_error(1, "expected 'degree k'");
  if (k == 0)
    parse_error(1, "degree must be positive");

  std::vector<std::vector<Element>> gens;
  for (std::size_t i = 1; i < lines.size(); ++i)
    gens.push_back(parse_row(lines[i], k, i + 1));
  return FiniteGroup::from_permutations(k, gens, cap);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace diffract::io
