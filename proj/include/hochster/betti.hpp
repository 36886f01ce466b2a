#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hochster/graph.hpp"
#include "hochster/homology.hpp"

namespace hochster {

inline constexpr std::size_t kDefaultMaxVertices = 22;

/// Graded Betti numbers β_{i,j} of an edge ideal; zero entries are not
/// stored. Column i is the homological index, row j - i.
class BettiDiagram {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (i, j)

  BettiDiagram() = default;
  BettiDiagram(std::size_t n_vertices, std::uint32_t field_char)
      : n_vertices_(n_vertices), field_char_(field_char) {}

  std::uint64_t at(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, std::uint64_t count);
  void set(std::size_t i, std::size_t j, std::uint64_t count);

  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t n_vertices() const { return n_vertices_; }
  std::uint32_t field_char() const { return field_char_; }

  /// max{j - i}; throws EmptyIdeal on an empty diagram.
  std::size_t regularity() const;
  /// Largest homological index with a nonzero entry.
  std::optional<std::size_t> max_index() const;
  /// u_i and l_i: largest and smallest j with β_{i,j} != 0.
  std::optional<std::size_t> upper(std::size_t i) const;
  std::optional<std::size_t> lower(std::size_t i) const;

  /// Equality of the stored entries; metadata is not compared.
  friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<Key, std::uint64_t> entries_;
  std::size_t n_vertices_ = 0;
  std::uint32_t field_char_ = 2;
};

enum class SweepMode {
  /// Skip cones (an isolated vertex in G[W]) and use the biadjacency
  /// reductions when the graph is bipartite.
  kReductions,
  /// Full homology for every W with |W| >= 2.
  kStraight,
};

struct BettiOptions {
  Prime field{2};
  std::size_t max_vertices = kDefaultMaxVertices;
  unsigned threads = 0;  // 0: hardware concurrency
  SweepMode mode = SweepMode::kReductions;
  std::uint64_t face_cap = kDefaultFaceCap;
};

/// β_{i,W}(I(g)) for the squarefree multidegree W: one entry (i, count) per
/// nonzero dim H̃_{|W|-i-2}(Δ(g)[W]), by increasing i.
std::vector<std::pair<std::size_t, std::uint64_t>> multigraded_betti(
    const Graph& g, const VertexSet& w, Prime p);

struct MultigradedEntry {
  std::size_t i = 0;
  VertexSet support;
  std::uint64_t count = 0;
};

/// All nonzero multigraded Betti numbers with |W| in [min_size, max_size],
/// ordered by W's rank (bitmask value).
std::vector<MultigradedEntry> multigraded_entries(
    const Graph& g, const BettiOptions& options, std::size_t min_size = 2,
    std::size_t max_size = 64);

/// Hochster sweep over all vertex subsets.
BettiDiagram betti_diagram(const Graph& g, const BettiOptions& options = {});

/// Sees every diagram betti_diagram returns. Calls are serialized; pass an
/// empty function to remove. Meant for auditing whole test runs.
using DiagramObserver = std::function<void(const Graph&, const BettiDiagram&)>;
void set_diagram_observer(DiagramObserver observer);

std::size_t regularity(const BettiDiagram& d);

/// The propagation property: β_{i,j} = β_{i,j+1} = 0 forces β_{i+1,j+2} = 0
/// for every i >= 0, j >= i + 2.
bool check_propagation(const BettiDiagram& d);

struct StrandExtrema {
  std::size_t i;
  std::size_t lower;  // l_i
  std::size_t upper;  // u_i
  friend bool operator==(const StrandExtrema&, const StrandExtrema&) = default;
};

std::vector<StrandExtrema> strand_extrema(const BettiDiagram& d);

/// u_{i+1} <= u_i + 2 and l_i >= l_0 + i for consecutive nonempty columns.
bool check_strand_bounds(const BettiDiagram& d);

}  // namespace hochster
