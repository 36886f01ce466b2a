#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "hochster/betti.hpp"
#include "hochster/graph.hpp"
#include "hochster/polarization.hpp"
#include "hochster/strands.hpp"

namespace hochster {

/// Edge list: line 1 `n`, then `u v` per line, 1-based. Blank lines and
/// `#` comments are skipped.
Graph parse_graph(std::string_view text);

/// Biadjacency: line 1 `n m`, then n rows of m entries 0/1.
BinaryMatrix parse_matrix(std::string_view text);

/// One monomial per line: `x1^2`, `x2*x5` (also `x3*x3`). Total degree 2.
/// The ring has as many variables as the largest index used.
QuadraticIdeal parse_ideal(std::string_view text);

enum class InputFormat { kGraph, kMatrix, kIdeal };

/// Decided by the first content line: one integer (graph), two integers
/// (matrix), or a monomial (ideal).
InputFormat detect_format(std::string_view text);

/// A graph read from an edge list or a biadjacency matrix, or an ideal.
using ParsedInput = std::variant<Graph, QuadraticIdeal>;

ParsedInput parse_input(std::string_view text);

std::string read_file(const std::string& path);

/// Table with rows j - i and columns i, "." for zero, plus a total row.
std::string render_table(const BettiDiagram& d);

nlohmann::json diagram_json(const BettiDiagram& d);

/// Fields class, t, i, degree, count, witnesses; vertices 1-based.
nlohmann::json strand_json(const StrandReport& r);

/// "reg=2", "reg=3" or "first nonlinear strand at i=.., degree .., count ..".
std::string strand_summary(const StrandReport& r);

/// Edge list in the input format.
std::string format_graph(const Graph& g);

}  // namespace hochster
