#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hochster/graph.hpp"

namespace hochster {

inline constexpr std::uint64_t kDefaultFaceCap = std::uint64_t{1} << 22;

/// Characteristic of the coefficient field GF(p).
struct Prime {
  std::uint32_t value = 2;
};

/// Throws PreconditionViolated unless 2 <= p < 2^16 and p is prime.
Prime make_prime(std::uint32_t p);

/// Reduced homology dimensions; dims[i] = dim H̃_i. Trailing zeros trimmed,
/// so the acyclic complex has an empty vector.
struct HomologyVector {
  std::vector<std::uint64_t> dims;
  std::uint32_t field_char = 2;

  std::uint64_t operator[](std::size_t i) const {
    return i < dims.size() ? dims[i] : 0;
  }
  bool acyclic() const { return dims.empty(); }
  friend bool operator==(const HomologyVector&,
                         const HomologyVector&) = default;
};

/// Δ(parent[subset]): faces are the independent sets of the induced subgraph.
struct IndependenceComplexView {
  const Graph& parent;
  VertexSet subset;
};

struct HomologyOptions {
  std::uint64_t face_cap = kDefaultFaceCap;
};

/// Reduced homology over GF(p) from the boundary matrices of the full
/// augmented chain complex. Verifies the Euler characteristic against face
/// counts and H̃_0 against the components of the 1-skeleton.
HomologyVector reduced_homology(const IndependenceComplexView& view, Prime p,
                                const HomologyOptions& options = {});

/// Same computation on a graph given as at most 64 adjacency masks; only the
/// vertices in `subset` participate. Used by the Betti sweep.
HomologyVector reduced_homology_masks(std::span<const std::uint64_t> adjacency,
                                      std::uint64_t subset, Prime p,
                                      const HomologyOptions& options = {});

/// The signed face counts Σ_{d >= -1} (-1)^d f_d of Δ(parent[subset]).
std::int64_t reduced_euler_characteristic(const IndependenceComplexView& view);

enum class ReductionRule : std::uint8_t {
  kZeroLine = 1,        // all-zero row or column: acyclic
  kIsolatedOne = 2,     // lone 1 in its row and column: delete pair, shift
  kFullLine = 3,        // all-ones row/column (with another row/column left)
  kUniqueZero = 4,      // unique zero whose column/row holds another zero
  kDominatedZeros = 5,  // zero set contained in another line's zero set
};

enum class MatrixSide : std::uint8_t { kRow, kColumn };

struct RemovedVertex {
  MatrixSide side;
  std::size_t index;  // row or column index in the input matrix
  ReductionRule rule;
};

struct ReductionOutcome {
  bool acyclic = false;
  BinaryMatrix reduced;           // empty when acyclic
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_cols;
  std::size_t degree_shift = 0;
  std::vector<RemovedVertex> removed;
};

/// Order in which rules are tried on each pass; the default is 1, 3, 4, 5, 2.
using RuleOrder = std::array<ReductionRule, 5>;
inline constexpr RuleOrder kDefaultRuleOrder = {
    ReductionRule::kZeroLine, ReductionRule::kFullLine,
    ReductionRule::kUniqueZero, ReductionRule::kDominatedZeros,
    ReductionRule::kIsolatedOne};

/// Applies the biadjacency reduction rules to a fixed point. For an outcome
/// that is not acyclic: H̃_i(original) = H̃_{i-shift}(reduced) for i >= shift
/// and H̃_i(original) = 0 for 0 < i < shift. The isolated-one rule is never
/// applied to a 1x1 matrix, which stays as the Σ_1 base. Matrices are at most
/// 64x64.
ReductionOutcome reduce_biadjacency(const BinaryMatrix& m,
                                    const RuleOrder& order = kDefaultRuleOrder);

/// Reductions followed by reduced_homology on what is left. `side_x` and
/// `side_y` partition `view.subset` with no edge inside either side.
HomologyVector homology_with_reductions(const IndependenceComplexView& view,
                                        const BipartiteView& bipartition,
                                        Prime p,
                                        const HomologyOptions& options = {});

/// Mask form: `x_side` is the X part of a bipartition of the whole graph;
/// the bipartition of the subset is its restriction.
HomologyVector homology_with_reductions_masks(
    std::span<const std::uint64_t> adjacency, std::uint64_t subset,
    std::uint64_t x_side, Prime p, const HomologyOptions& options = {});

}  // namespace hochster
