#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "hochster/betti.hpp"
#include "hochster/graph.hpp"

namespace hochster {

/// Monomial ideal minimally generated in degree two: squares x_i^2 and
/// squarefree products x_u x_v. Variables are 0-based.
struct QuadraticIdeal {
  std::size_t n_vars = 0;
  std::set<std::size_t> squares;
  std::set<Edge> edges;  // u < v
};

/// Validates indices and requires at least one square.
QuadraticIdeal make_quadratic_ideal(std::size_t n_vars,
                                    std::set<std::size_t> squares,
                                    std::set<Edge> edges);

/// The non-simple graph of the ideal: G_sqf plus a loop at each square.
struct LoopedGraph {
  Graph base;               // G_sqf on all n_vars variables
  std::vector<bool> loops;  // loops[v]: x_v^2 is a generator
};

LoopedGraph looped_graph(const QuadraticIdeal& ideal);

/// G_sqf restricted to the variables that occur in some generator.
Graph support_graph(const QuadraticIdeal& ideal);

/// G_pol: each square x_i^2 becomes the whisker {x_i, y_i} with a fresh
/// vertex y_i. `origin[v]` is the variable that vertex v folds back onto.
struct Polarization {
  Graph graph;
  std::vector<std::size_t> origin;
};

Polarization polarize(const QuadraticIdeal& ideal);

struct DepolarizedEntry {
  std::size_t i = 0;
  std::vector<unsigned> multidegree;  // exponent per original variable
  std::uint64_t count = 0;
  friend bool operator==(const DepolarizedEntry&,
                         const DepolarizedEntry&) = default;
};

struct NonsquarefreeBetti {
  BettiDiagram diagram;
  std::vector<DepolarizedEntry> multigraded;  // empty unless requested
};

/// Betti numbers of the ideal via its polarization; multigraded entries are
/// reported on the original variables (deg y_i = deg x_i).
NonsquarefreeBetti betti_nonsquarefree(const QuadraticIdeal& ideal,
                                       const BettiOptions& options = {},
                                       bool with_multigraded = false);

/// An edge of the looped graph; first == second for a loop.
using LoopedEdge = Edge;

/// Two edges are totally disjoint when they share no vertex and no edge of
/// G_sqf joins an endpoint of one to an endpoint of the other.
bool totally_disjoint(const LoopedGraph& g, const LoopedEdge& a,
                      const LoopedEdge& b);

struct DisjointTriples {
  std::uint64_t count = 0;
  std::vector<std::array<LoopedEdge, 3>> witnesses;
};

/// Unordered triples of pairwise totally disjoint edges, loops included.
DisjointTriples totally_disjoint_triples(const LoopedGraph& g,
                                         std::size_t witness_cap = 64);

bool has_totally_disjoint_pair(const LoopedGraph& g);

/// The three combinatorial conditions for reg(I) = 3 when G_sqf is connected
/// and bipartite. Throws NotConnected / NotBipartite otherwise.
struct Reg3Conditions {
  bool disjoint_pair_or_long_cycle = false;
  bool no_disjoint_triple = false;
  bool no_long_bc_cycle = false;
  bool holds() const {
    return disjoint_pair_or_long_cycle && no_disjoint_triple &&
           no_long_bc_cycle;
  }
};

Reg3Conditions reg3_conditions(const QuadraticIdeal& ideal);
bool reg3_nonsquarefree(const QuadraticIdeal& ideal);

}  // namespace hochster
