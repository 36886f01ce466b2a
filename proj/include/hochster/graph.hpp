#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hochster {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

/// Largest graph accepted by the graph-theoretic decision procedures.
inline constexpr std::size_t kMaxGraphVertices = 10000;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u][v]; }
  const VertexSet& neighbors(Vertex u) const { return adjacency_[u]; }
  std::size_t degree(Vertex u) const { return adjacency_[u].count(); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Neighborhood of `u` as a 64-bit mask. Requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex u) const;
  /// All rows as masks. Requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  /// Optional vertex names; empty means "use 1-based indices".
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Vertex v) const;

  VertexSet all_vertices() const { return VertexSet(order()).set(); }
  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Dense 0/1 matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols, bool value = false)
      : rows_(rows), cols_(cols), data_(rows * cols, value ? 1 : 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 && cols_ == 0; }
  bool operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c] != 0;
  }
  void set(std::size_t r, std::size_t c, bool value) {
    data_[r * cols_ + c] = value ? 1 : 0;
  }
  /// Entrywise 1 - a.
  BinaryMatrix complemented() const;
  BinaryMatrix transposed() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// A bipartition X ⊔ Y of a graph's vertices with the biadjacency matrix.
struct BipartiteView {
  std::vector<Vertex> side_x;
  std::vector<Vertex> side_y;
  BinaryMatrix biadjacency;  // side_x.size() x side_y.size()
};

/// Builds a view from explicit sides. Throws NotBipartite when the sides do
/// not partition V(g) or some edge lies inside one side.
BipartiteView make_bipartite_view(const Graph& g, std::vector<Vertex> side_x,
                                  std::vector<Vertex> side_y);

/// Bipartite graph on x_1..x_n, y_1..y_m (vertex indices 0..n-1 then n..n+m-1).
Graph graph_from_biadjacency(const BinaryMatrix& m);

/// Closed walk of odd length returned when no 2-coloring exists. The first
/// vertex is repeated at the end.
struct OddClosedWalk {
  std::vector<Vertex> walk;
};

using BipartitionResult = std::variant<BipartiteView, OddClosedWalk>;

Graph complement(const Graph& g);

/// 2-coloring by BFS. Vertices are listed in increasing order on each side,
/// and the side containing the smallest vertex of each component is X.
BipartitionResult detect_bipartition(const Graph& g);

/// Convenience: the bipartite view or NotBipartite.
BipartiteView require_bipartition(const Graph& g);

/// Complements the X-Y edges of `g` within `view`. Disconnected input throws
/// NotConnected unless `allow_disconnected` acknowledges that the bipartition
/// is not determined by `g` alone.
Graph bipartite_complement(const Graph& g, const BipartiteView& view,
                           bool allow_disconnected = false);

/// Bipartite complement using the detected bipartition of a connected graph.
Graph bipartite_complement(const Graph& g);

/// Subgraph induced on `w`; vertices renumbered in increasing order of `w`.
/// Labels are carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& w);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> w);

VertexSet make_subset(std::size_t n, std::span<const Vertex> members);
std::vector<Vertex> subset_members(const VertexSet& w);

bool is_connected(const Graph& g);

/// Perfect elimination ordering test on a lexicographic BFS order.
bool is_chordal(const Graph& g);

/// Smallest t >= min_len such that g has an induced t-cycle.
std::optional<std::size_t> min_induced_cycle(const Graph& g,
                                             std::size_t min_len = 4);

struct InducedCycles {
  std::uint64_t count = 0;
  std::vector<std::vector<Vertex>> witnesses;  // sorted vertex sets, capped
};

/// Induced t-cycles, counted as vertex subsets; at most `witness_cap` of the
/// subsets are returned (in discovery order).
InducedCycles find_induced_cycles(const Graph& g, std::size_t t,
                                  std::size_t witness_cap = 64);

std::uint64_t count_induced_cycles(const Graph& g, std::size_t t);

/// μ(g): the largest s with sK_2 as an induced subgraph.
std::size_t induced_matching_number(const Graph& g);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Number of components that are not isolated vertices.
std::size_t nonisolated_component_count(const Graph& g);

// Families used throughout.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// sides 0..n-1 and n..n+m-1.
Graph complete_bipartite_graph(std::size_t n, std::size_t m);
/// m disjoint edges {2k, 2k+1}.
Graph matching_graph(std::size_t m);
/// Disjoint union; vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace hochster
