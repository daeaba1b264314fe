#include "mesostab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "mesostab/error.hpp"

namespace mesostab::io {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (sep == ' ') {
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
  }
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string("expected a non-negative integer ") + what + ", got '" +
                               token + "'");
  return value;
}

Vertex parse_vertex(const std::string& token, std::size_t n, std::size_t line) {
  const std::size_t v = parse_count(token, line, "vertex label");
  if (v < 1 || v > n)
    throw ParseError(line, "vertex " + token + " outside 1.." + std::to_string(n));
  return v - 1;
}

std::size_t parse_header(const Line& line, const char* keyword) {
  const auto tok = split(line.text, ' ');
  if (tok.size() == 2 && tok[0] == keyword) return parse_count(tok[1], line.number, "count");
  if (tok.size() == 1) return parse_count(tok[0], line.number, "count");
  throw ParseError(line.number, std::string("expected header '") + keyword + " <count>'");
}

std::vector<Edge> parse_edges(const std::vector<Line>& lines, std::size_t from, std::size_t n) {
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t k = from; k < lines.size(); ++k) {
    const auto tok = split(lines[k].text, ' ');
    if (tok.size() != 3) throw ParseError(lines[k].number, "expected 'i j w'");
    const Vertex u = parse_vertex(tok[0], n, lines[k].number);
    const Vertex v = parse_vertex(tok[1], n, lines[k].number);
    if (!seen.insert(std::minmax(u, v)).second)
      throw ParseError(lines[k].number, "edge {" + tok[0] + "," + tok[1] + "} listed twice");
    edges.push_back({u, v, parse_real(tok[2], lines[k].number)});
  }
  return edges;
}

// Re-raise graph/matrix validation failures as parse errors.
template <typename F>
auto validated(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

double parse_real(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* begin = token.data();
  if (!token.empty() && token.front() == '+') ++begin;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected a decimal number, got '" + token + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite value '" + token + "'");
  return value;
}

WeightedGraph read_edge_list(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, "empty edge list: missing 'n <count>' header");
  const std::size_t n = parse_header(lines[0], "n");
  std::vector<Edge> edges = parse_edges(lines, 1, n);
  const std::size_t last = lines.back().number;
  return validated(last, [&] { return WeightedGraph(n, std::move(edges)); });
}

SymmetricMatrix read_matrix_csv(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, "empty matrix");
  std::vector<std::vector<double>> rows;
  for (const Line& line : lines) {
    const auto cells = split(line.text, ',');
    if (cells.size() != lines.size())
      throw ParseError(line.number, "expected " + std::to_string(lines.size()) +
                                        " comma-separated entries, got " +
                                        std::to_string(cells.size()));
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_real(c, line.number));
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rows[i][j] != rows[j][i])
        throw ParseError(lines[i].number, "entry " + std::to_string(j + 1) +
                                              " differs from its mirror on row " +
                                              std::to_string(j + 1) + "; the matrix must be symmetric");
  return validated(0, [&] { return SymmetricMatrix::from_rows(rows); });
}

KuramotoSystem read_kuramoto(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.size() < 2) throw ParseError(0, "expected 'N <count>' and 'omega: ...' lines");
  const std::size_t n = parse_header(lines[0], "N");
  if (n == 0) throw ParseError(lines[0].number, "N must be positive");

  const Line& omega_line = lines[1];
  if (omega_line.text.rfind("omega:", 0) != 0)
    throw ParseError(omega_line.number, "expected 'omega: w_1 ... w_N'");
  const auto tok = split(omega_line.text.substr(6), ' ');
  if (tok.size() != n)
    throw ParseError(omega_line.number, "expected " + std::to_string(n) + " frequencies, got " +
                                            std::to_string(tok.size()));
  std::vector<double> omega;
  for (const auto& t : tok) omega.push_back(parse_real(t, omega_line.number));

  SymmetricMatrix b(n);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto fields = split(lines[k].text, ' ');
    if (fields.size() != 3) throw ParseError(lines[k].number, "expected 'i j B_ij'");
    const Vertex i = parse_vertex(fields[0], n, lines[k].number);
    const Vertex j = parse_vertex(fields[1], n, lines[k].number);
    const double w = parse_real(fields[2], lines[k].number);
    if (i == j) throw ParseError(lines[k].number, "self-coupling is not allowed");
    if (w < 0.0) throw ParseError(lines[k].number, "coupling must be non-negative");
    if (b(i, j) != 0.0) throw ParseError(lines[k].number, "duplicate coupling");
    b.set(i, j, w);
  }
  return validated(0, [&] { return KuramotoSystem(std::move(omega), std::move(b)); });
}

std::vector<double> read_phases(std::istream& in) {
  std::vector<double> out;
  for (const Line& line : content_lines(in))
    for (const auto& t : split(line.text, ' ')) out.push_back(parse_real(t, line.number));
  return out;
}

}  // namespace mesostab::io
