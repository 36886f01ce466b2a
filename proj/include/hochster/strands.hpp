#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hochster/graph.hpp"

namespace hochster {

inline constexpr std::size_t kDefaultWitnessCap = 64;

enum class RegularityClass {
  kLinear,     // reg = 2
  kReg3,       // reg = 3 (bipartite characterization)
  kHigher,     // reg > 3 (bipartite)
  kNonlinear,  // reg > 2, graph not connected bipartite: exact value not
               // decided combinatorially
};

std::string to_string(RegularityClass c);

/// Location and size of the first strand off the linear rows, with the
/// vertex subsets that carry it.
struct StrandReport {
  RegularityClass regularity_class = RegularityClass::kLinear;
  std::optional<std::size_t> cycle_length;        // t
  std::optional<std::size_t> first_nonlinear_i;   // t - 3 or t - 4
  std::optional<std::size_t> strand_degree;       // t
  std::optional<std::uint64_t> strand_count;      // exact count
  std::vector<std::vector<Vertex>> witnesses;     // capped
};

/// reg(I(g)) = 2 iff the complement of g is chordal. Throws EmptyIdeal when g
/// has no edges.
bool froberg_linear(const Graph& g);

/// Requires reg(I(g)) > 2. With t the least induced cycle length of the
/// complement, reports i = t - 3, degree t and the number of induced t-cycles.
StrandReport first_nonlinear_general(
    const Graph& g, std::size_t witness_cap = kDefaultWitnessCap);

/// Connected bipartite g with an edge: reg = 3 iff the complement has an
/// induced cycle and the bipartite complement has none of length >= 6.
bool reg3_bipartite(const Graph& g);

/// Requires g connected bipartite with reg > 3 (decided combinatorially).
/// With t the least induced cycle length >= 6 of the bipartite complement,
/// reports i = t - 4, degree t and the number of induced t-cycles there.
StrandReport first_nonlinear_bipartite(
    const Graph& g, std::size_t witness_cap = kDefaultWitnessCap);

/// Dispatches on the structure of g: linear, bipartite (reg 3 or higher), or
/// the general first-nonlinear report.
StrandReport classify_strands(const Graph& g,
                              std::size_t witness_cap = kDefaultWitnessCap);

}  // namespace hochster
