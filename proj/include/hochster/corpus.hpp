#pragma once

#include <cstdint>
#include <vector>

#include "hochster/graph.hpp"
#include "hochster/polarization.hpp"

namespace hochster {

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDED6E;

/// Number of vertex pairs, n(n-1)/2.
std::size_t pair_count(std::size_t n);

/// Labeled graph on n <= 11 vertices whose edge set is the bit pattern
/// `code` over the pairs (0,1), (0,2), .., (1,2), .. in lexicographic order.
Graph graph_from_code(std::size_t n, std::uint64_t code);
std::uint64_t graph_code(const Graph& g);

/// Least code over all relabelings; n <= 8.
std::uint64_t canonical_code(const Graph& g);

/// One graph per isomorphism class on n <= 6 vertices, the one with the
/// least code.
std::vector<Graph> isomorphism_representatives(std::size_t n);

/// Every graph on n + 1 vertices is isomorphic to one of these: each class
/// representative on n vertices with one extra vertex joined to any subset.
std::vector<Graph> one_vertex_extensions(std::size_t n);

/// Connected bipartite graphs from every a x b biadjacency matrix with
/// 1 <= a <= b and a + b <= max_vertices. X is listed first.
std::vector<Graph> connected_bipartite_graphs(std::size_t max_vertices);

/// Seeded random connected bipartite graphs with min..max vertices.
std::vector<Graph> random_connected_bipartite(std::size_t count,
                                              std::size_t min_vertices,
                                              std::size_t max_vertices,
                                              std::uint64_t seed);

/// Quadratic ideals on n <= max_vars variables, all used, whose squarefree
/// part is a connected bipartite graph on all n variables, with
/// 1..max_squares squares.
std::vector<QuadraticIdeal> quadratic_ideals(std::size_t max_vars,
                                             std::size_t max_squares);

std::vector<QuadraticIdeal> random_quadratic_ideals(std::size_t count,
                                                    std::size_t min_vars,
                                                    std::size_t max_vars,
                                                    std::uint64_t seed);

}  // namespace hochster
