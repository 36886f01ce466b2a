#include "hochster/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    ++number;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s = s.substr(end);
  }
}

std::size_t parse_count(std::string_view token, const Line& line,
                        const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line.number, std::string("expected ") + what +
                                      ", got '" + std::string(token) + "'");
  return value;
}

bool is_integer_token(std::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

struct Monomial {
  std::size_t line;
  std::vector<std::size_t> vars;  // 0-based, with multiplicity
};

// x<k>[^e] factors joined by '*'.
Monomial parse_monomial(const Line& line) {
  Monomial mono{line.number, {}};
  std::string_view rest = line.text;
  while (true) {
    const auto star = rest.find('*');
    std::string_view factor = trim(rest.substr(0, star));
    if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X'))
      throw ParseError(line.number, "expected a variable x<k>, got '" +
                                        std::string(factor) + "'");
    factor.remove_prefix(1);
    std::size_t exponent = 1;
    const auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      exponent = parse_count(trim(factor.substr(caret + 1)), line, "exponent");
      factor = trim(factor.substr(0, caret));
    }
    const std::size_t index = parse_count(factor, line, "variable index");
    if (index == 0)
      throw ParseError(line.number, "variables are numbered from x1");
    if (exponent == 0 || exponent > 2 || mono.vars.size() + exponent > 2)
      throw ParseError(line.number, "monomial '" + std::string(line.text) +
                                        "' is not of total degree 2");
    mono.vars.insert(mono.vars.end(), exponent, index - 1);
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  if (mono.vars.size() != 2)
    throw ParseError(line.number, "monomial '" + std::string(line.text) +
                                      "' is not of total degree 2");
  std::sort(mono.vars.begin(), mono.vars.end());
  return mono;
}

struct Generators {
  std::size_t n_vars = 0;
  std::set<std::size_t> squares;
  std::set<Edge> edges;
};

Generators parse_generators(std::string_view text) {
  Generators gens;
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "no generators");
  for (const Line& line : lines) {
    const Monomial m = parse_monomial(line);
    gens.n_vars = std::max(gens.n_vars, m.vars[1] + 1);
    const bool fresh = m.vars[0] == m.vars[1]
                           ? gens.squares.insert(m.vars[0]).second
                           : gens.edges.insert({m.vars[0], m.vars[1]}).second;
    if (!fresh)
      throw ParseError(line.number, "duplicate generator '" +
                                        std::string(line.text) + "'");
  }
  if (gens.n_vars > kMaxGraphVertices)
    throw TooManyVertices(gens.n_vars, kMaxGraphVertices);
  return gens;
}

Graph graph_of_edges(std::size_t n, const std::set<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  const auto head = tokens(lines[0].text);
  if (head.size() != 1)
    throw ParseError(lines[0].number, "expected the vertex count alone");
  const std::size_t n = parse_count(head[0], lines[0], "vertex count");
  if (n == 0) throw ParseError(lines[0].number, "graph needs a vertex");
  if (n > kMaxGraphVertices)
    throw ParseError(lines[0].number,
                     "vertex count " + std::to_string(n) + " above the cap " +
                         std::to_string(kMaxGraphVertices));
  Graph g(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto t = tokens(line.text);
    if (t.size() != 2)
      throw ParseError(line.number, "expected an edge 'u v'");
    const std::size_t u = parse_count(t[0], line, "vertex");
    const std::size_t v = parse_count(t[1], line, "vertex");
    if (u == 0 || v == 0 || u > n || v > n)
      throw ParseError(line.number, "vertex out of range 1.." +
                                        std::to_string(n));
    if (u == v) throw ParseError(line.number, "loop at vertex " +
                                                  std::to_string(u));
    if (g.adjacent(u - 1, v - 1))
      throw ParseError(line.number, "duplicate edge " + std::to_string(u) +
                                        " " + std::to_string(v));
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

BinaryMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty matrix file");
  const auto head = tokens(lines[0].text);
  if (head.size() != 2)
    throw ParseError(lines[0].number, "expected 'n m'");
  const std::size_t rows = parse_count(head[0], lines[0], "row count");
  const std::size_t cols = parse_count(head[1], lines[0], "column count");
  if (rows == 0 || cols == 0)
    throw ParseError(lines[0].number, "matrix needs a row and a column");
  if (rows + cols > kMaxGraphVertices)
    throw ParseError(lines[0].number, "matrix larger than the vertex cap");
  if (lines.size() != rows + 1)
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(lines.size() - 1));
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[r + 1];
    const auto t = tokens(line.text);
    if (t.size() != cols)
      throw ParseError(line.number, "expected " + std::to_string(cols) +
                                        " entries, got " +
                                        std::to_string(t.size()));
    for (std::size_t c = 0; c < cols; ++c) {
      if (t[c] != "0" && t[c] != "1")
        throw ParseError(line.number, "entry '" + std::string(t[c]) +
                                          "' is not 0 or 1");
      m.set(r, c, t[c] == "1");
    }
  }
  return m;
}

QuadraticIdeal parse_ideal(std::string_view text) {
  Generators gens = parse_generators(text);
  if (gens.squares.empty())
    throw ParseError(0, "ideal has no square generator");
  return make_quadratic_ideal(gens.n_vars, std::move(gens.squares),
                              std::move(gens.edges));
}

InputFormat detect_format(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const auto head = tokens(lines[0].text);
  if (std::all_of(head.begin(), head.end(), is_integer_token)) {
    if (head.size() == 1) return InputFormat::kGraph;
    if (head.size() == 2) return InputFormat::kMatrix;
  }
  if (lines[0].text[0] == 'x' || lines[0].text[0] == 'X')
    return InputFormat::kIdeal;
  throw ParseError(lines[0].number,
                   "cannot tell the input format from '" +
                       std::string(lines[0].text) + "'");
}

ParsedInput parse_input(std::string_view text) {
  switch (detect_format(text)) {
    case InputFormat::kGraph:
      return parse_graph(text);
    case InputFormat::kMatrix:
      return graph_from_biadjacency(parse_matrix(text));
    case InputFormat::kIdeal:
      break;
  }
  Generators gens = parse_generators(text);
  // A squarefree quadratic ideal is an edge ideal.
  if (gens.squares.empty()) return graph_of_edges(gens.n_vars, gens.edges);
  return make_quadratic_ideal(gens.n_vars, std::move(gens.squares),
                              std::move(gens.edges));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string render_table(const BettiDiagram& d) {
  if (d.empty()) return "zero ideal\n";
  const std::size_t columns = *d.max_index() + 1;
  std::size_t top = 0, bottom = 0;
  bool first = true;
  std::vector<std::uint64_t> totals(columns, 0);
  for (const auto& [key, count] : d.entries()) {
    const std::size_t row = key.second - key.first;
    top = first ? row : std::min(top, row);
    bottom = first ? row : std::max(bottom, row);
    first = false;
    totals[key.first] += count;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  auto header = std::vector<std::string>{};
  for (std::size_t i = 0; i < columns; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  labels.push_back("");
  std::vector<std::string> total_row;
  for (auto t : totals) total_row.push_back(std::to_string(t));
  cells.push_back(total_row);
  labels.push_back("total:");
  for (std::size_t row = top; row <= bottom; ++row) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns; ++i) {
      const auto v = d.at(i, i + row);
      line.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(line);
    labels.push_back(std::to_string(row) + ":");
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(columns, 1);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < columns; ++i)
      width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (std::size_t i = 0; i < columns; ++i)
      out << ' ' << std::string(width[i] - cells[r][i].size(), ' ')
          << cells[r][i];
    out << '\n';
  }
  return out.str();
}

nlohmann::json diagram_json(const BettiDiagram& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, count] : d.entries())
    entries.push_back({{"i", key.first}, {"j", key.second}, {"value", count}});
  nlohmann::json out = {{"field", d.field_char()}, {"entries", entries}};
  out["regularity"] =
      d.empty() ? nlohmann::json(nullptr) : nlohmann::json(d.regularity());
  return out;
}

nlohmann::json strand_json(const StrandReport& r) {
  auto opt = [](const auto& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::json cycle = nlohmann::json::array();
    for (Vertex v : w) cycle.push_back(v + 1);
    witnesses.push_back(cycle);
  }
  return {{"class", to_string(r.regularity_class)},
          {"t", opt(r.cycle_length)},
          {"i", opt(r.first_nonlinear_i)},
          {"degree", opt(r.strand_degree)},
          {"count", opt(r.strand_count)},
          {"witnesses", witnesses}};
}

std::string strand_summary(const StrandReport& r) {
  switch (r.regularity_class) {
    case RegularityClass::kLinear:
      return "reg=2";
    case RegularityClass::kReg3:
      return "reg=3";
    default:
      return "first nonlinear strand at i=" +
             std::to_string(*r.first_nonlinear_i) + ", degree " +
             std::to_string(*r.strand_degree) + ", count " +
             std::to_string(*r.strand_count);
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace hochster
