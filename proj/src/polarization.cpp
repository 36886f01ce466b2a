#include "hochster/polarization.hpp"

#include <algorithm>
#include <string>

#include "hochster/errors.hpp"

namespace hochster {

QuadraticIdeal make_quadratic_ideal(std::size_t n_vars,
                                    std::set<std::size_t> squares,
                                    std::set<Edge> edges) {
  QuadraticIdeal ideal{n_vars, {}, {}};
  for (std::size_t v : squares) {
    if (v >= n_vars)
      throw SubsetOutOfRange("square of variable x" + std::to_string(v + 1) +
                             " outside the ring");
    ideal.squares.insert(v);
  }
  for (auto [u, v] : edges) {
    if (u == v)
      throw PreconditionViolated("x" + std::to_string(u + 1) +
                                 "^2 listed as a squarefree generator");
    if (u > v) std::swap(u, v);
    if (v >= n_vars)
      throw SubsetOutOfRange("generator uses variable x" +
                             std::to_string(v + 1) + " outside the ring");
    ideal.edges.insert({u, v});
  }
  if (ideal.squares.empty())
    throw PreconditionViolated(
        "ideal has no square generator; use the edge ideal of the graph");
  return ideal;
}

LoopedGraph looped_graph(const QuadraticIdeal& ideal) {
  LoopedGraph g{Graph(ideal.n_vars), std::vector<bool>(ideal.n_vars, false)};
  for (const auto& [u, v] : ideal.edges) g.base.add_edge(u, v);
  for (std::size_t v : ideal.squares) g.loops[v] = true;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < ideal.n_vars; ++v)
    labels.push_back("x" + std::to_string(v + 1));
  g.base.set_labels(std::move(labels));
  return g;
}

Graph support_graph(const QuadraticIdeal& ideal) {
  const LoopedGraph g = looped_graph(ideal);
  VertexSet used(ideal.n_vars);
  for (std::size_t v : ideal.squares) used.set(v);
  for (const auto& [u, v] : ideal.edges) used.set(u).set(v);
  return induced_subgraph(g.base, used);
}

Polarization polarize(const QuadraticIdeal& ideal) {
  const std::size_t n = ideal.n_vars;
  Polarization pol{Graph(n + ideal.squares.size()), {}};
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    pol.origin.push_back(v);
    labels.push_back("x" + std::to_string(v + 1));
  }
  std::size_t fresh = n;
  for (std::size_t v : ideal.squares) {
    pol.graph.add_edge(v, fresh++);
    pol.origin.push_back(v);
    labels.push_back("y" + std::to_string(v + 1));
  }
  for (const auto& [u, v] : ideal.edges) pol.graph.add_edge(u, v);
  pol.graph.set_labels(std::move(labels));
  return pol;
}

NonsquarefreeBetti betti_nonsquarefree(const QuadraticIdeal& ideal,
                                       const BettiOptions& options,
                                       bool with_multigraded) {
  const Polarization pol = polarize(ideal);
  NonsquarefreeBetti out{betti_diagram(pol.graph, options), {}};
  if (!with_multigraded) return out;
  for (const auto& entry : multigraded_entries(pol.graph, options)) {
    DepolarizedEntry folded{entry.i, std::vector<unsigned>(ideal.n_vars, 0),
                            entry.count};
    for (auto v = entry.support.find_first(); v != VertexSet::npos;
         v = entry.support.find_next(v)) {
      // y_i only divides x_i y_i, so a nonzero multidegree containing y_i
      // also contains x_i.
      if (v >= ideal.n_vars && !entry.support[pol.origin[v]])
        throw std::logic_error("nonzero polarized multidegree with y_" +
                               std::to_string(pol.origin[v] + 1) +
                               " but without x_" +
                               std::to_string(pol.origin[v] + 1));
      ++folded.multidegree[pol.origin[v]];
    }
    out.multigraded.push_back(std::move(folded));
  }
  return out;
}

namespace {

std::vector<LoopedEdge> looped_edges(const LoopedGraph& g) {
  std::vector<LoopedEdge> edges;
  for (std::size_t v = 0; v < g.loops.size(); ++v)
    if (g.loops[v]) edges.push_back({v, v});
  for (const auto& e : g.base.edges()) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

bool totally_disjoint(const LoopedGraph& g, const LoopedEdge& a,
                      const LoopedEdge& b) {
  for (Vertex u : {a.first, a.second})
    for (Vertex v : {b.first, b.second})
      if (u == v || g.base.adjacent(u, v)) return false;
  return true;
}

DisjointTriples totally_disjoint_triples(const LoopedGraph& g,
                                         std::size_t witness_cap) {
  const auto edges = looped_edges(g);
  DisjointTriples out;
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (!totally_disjoint(g, edges[a], edges[b])) continue;
      for (std::size_t c = b + 1; c < edges.size(); ++c)
        if (totally_disjoint(g, edges[a], edges[c]) &&
            totally_disjoint(g, edges[b], edges[c])) {
          ++out.count;
          if (out.witnesses.size() < witness_cap)
            out.witnesses.push_back({edges[a], edges[b], edges[c]});
        }
    }
  return out;
}

bool has_totally_disjoint_pair(const LoopedGraph& g) {
  const auto edges = looped_edges(g);
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (totally_disjoint(g, edges[a], edges[b])) return true;
  return false;
}

Reg3Conditions reg3_conditions(const QuadraticIdeal& ideal) {
  const Graph sqf = support_graph(ideal);
  if (!is_connected(sqf))
    throw NotConnected("hypothesis failed: G_sqf must be connected");
  const BipartiteView view = require_bipartition(sqf);
  const LoopedGraph looped = looped_graph(ideal);
  Reg3Conditions c;
  c.disjoint_pair_or_long_cycle = has_totally_disjoint_pair(looped) ||
                                  min_induced_cycle(complement(sqf), 5);
  c.no_disjoint_triple = totally_disjoint_triples(looped, 0).count == 0;
  c.no_long_bc_cycle =
      !min_induced_cycle(bipartite_complement(sqf, view), 8).has_value();
  return c;
}

bool reg3_nonsquarefree(const QuadraticIdeal& ideal) {
  return reg3_conditions(ideal).holds();
}

}  // namespace hochster
