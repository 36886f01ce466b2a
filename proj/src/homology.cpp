#include "hochster/homology.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

constexpr std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

/// Bits strictly above position v.
constexpr std::uint64_t above(std::size_t v) {
  return v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
}

/// Local graph on k <= 64 vertices.
struct LocalGraph {
  std::vector<std::uint64_t> adjacency;
  std::size_t order() const { return adjacency.size(); }
  std::uint64_t all() const {
    return order() == 64 ? ~std::uint64_t{0} : bit(order()) - 1;
  }
};

LocalGraph restrict_masks(std::span<const std::uint64_t> adjacency,
                          std::uint64_t subset) {
  LocalGraph local;
  std::vector<std::size_t> index_of(adjacency.size(), 0);
  std::size_t k = 0;
  for (std::uint64_t rest = subset; rest; rest &= rest - 1)
    index_of[std::countr_zero(rest)] = k++;
  local.adjacency.reserve(k);
  for (std::uint64_t rest = subset; rest; rest &= rest - 1) {
    const std::size_t v = std::countr_zero(rest);
    std::uint64_t row = 0;
    for (std::uint64_t nb = adjacency[v] & subset; nb; nb &= nb - 1)
      row |= bit(index_of[std::countr_zero(nb)]);
    local.adjacency.push_back(row);
  }
  return local;
}

/// Components of the complement of `g` (the 1-skeleton of Δ(g)).
std::size_t complement_components(const LocalGraph& g) {
  const std::uint64_t all = g.all();
  std::uint64_t unseen = all;
  std::size_t components = 0;
  while (unseen) {
    ++components;
    std::uint64_t frontier = unseen & (~unseen + 1);
    unseen &= ~frontier;
    while (frontier) {
      const std::size_t v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t next = unseen & ~g.adjacency[v];
      unseen &= ~next;
      frontier |= next;
    }
  }
  return components;
}

/// Independent sets of `g` grouped by size; levels[d] holds the faces of
/// dimension d sorted by mask.
struct FaceLevels {
  std::vector<std::vector<std::uint64_t>> levels;
  std::uint64_t total = 0;
  bool exceeded = false;
};

FaceLevels enumerate_faces(const LocalGraph& g, std::uint64_t cap) {
  FaceLevels out;
  // Each face carries the mask of vertices that can still extend it.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> frontier;
  for (std::size_t v = 0; v < g.order(); ++v)
    frontier.emplace_back(bit(v), g.all() & above(v) & ~g.adjacency[v]);
  while (!frontier.empty()) {
    out.total += frontier.size();
    if (out.total > cap) {
      out.exceeded = true;
      return out;
    }
    std::vector<std::uint64_t> level;
    level.reserve(frontier.size());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    for (const auto& [face, candidates] : frontier) {
      level.push_back(face);
      for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
        const std::size_t v = std::countr_zero(rest);
        next.emplace_back(face | bit(v),
                          candidates & above(v) & ~g.adjacency[v]);
      }
    }
    std::sort(level.begin(), level.end());
    out.levels.push_back(std::move(level));
    frontier = std::move(next);
  }
  return out;
}

std::size_t face_index(const std::vector<std::uint64_t>& level,
                       std::uint64_t face) {
  return static_cast<std::size_t>(
      std::lower_bound(level.begin(), level.end(), face) - level.begin());
}

/// Rank over GF(2) of the boundary map from `faces` to `lower`.
std::uint64_t boundary_rank_gf2(const std::vector<std::uint64_t>& faces,
                                const std::vector<std::uint64_t>& lower) {
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::uint64_t> pivots;  // row-major, `words` per pivot
  std::vector<std::int64_t> pivot_at(lower.size(), -1);
  std::vector<std::uint64_t> column(words);
  std::uint64_t rank = 0;
  for (std::uint64_t face : faces) {
    std::fill(column.begin(), column.end(), 0);
    for (std::uint64_t rest = face; rest; rest &= rest - 1) {
      const std::uint64_t lowest = rest & (~rest + 1);
      const std::size_t row = face_index(lower, face & ~lowest);
      column[row / 64] ^= bit(row % 64);
    }
    for (std::size_t w = 0; w < words;) {
      if (column[w] == 0) {
        ++w;
        continue;
      }
      const std::size_t lead = w * 64 + std::countr_zero(column[w]);
      const std::int64_t p = pivot_at[lead];
      if (p < 0) {
        pivot_at[lead] = static_cast<std::int64_t>(rank);
        pivots.insert(pivots.end(), column.begin(), column.end());
        ++rank;
        break;
      }
      const std::uint64_t* src = pivots.data() + p * words;
      for (std::size_t k = w; k < words; ++k) column[k] ^= src[k];
    }
  }
  return rank;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Rank over GF(p), p odd, with signed boundary coefficients.
std::uint64_t boundary_rank_gfp(const std::vector<std::uint64_t>& faces,
                                const std::vector<std::uint64_t>& lower,
                                std::uint32_t p) {
  const std::size_t rows = lower.size();
  std::vector<std::uint32_t> pivots;  // normalized: leading entry is 1
  std::vector<std::int64_t> pivot_at(rows, -1);
  std::vector<std::uint32_t> column(rows);
  std::uint64_t rank = 0;
  for (std::uint64_t face : faces) {
    std::fill(column.begin(), column.end(), 0);
    std::size_t position = 0;
    for (std::uint64_t rest = face; rest; rest &= rest - 1, ++position) {
      const std::uint64_t sub = face & ~(rest & (~rest + 1));
      column[face_index(lower, sub)] = position % 2 == 0 ? 1 : p - 1;
    }
    for (std::size_t lead = 0; lead < rows; ++lead) {
      if (column[lead] == 0) continue;
      const std::int64_t at = pivot_at[lead];
      if (at < 0) {
        const std::uint64_t inv = inverse_mod(column[lead], p);
        for (std::size_t k = lead; k < rows; ++k)
          column[k] = static_cast<std::uint32_t>(column[k] * inv % p);
        pivot_at[lead] = static_cast<std::int64_t>(rank);
        pivots.insert(pivots.end(), column.begin(), column.end());
        ++rank;
        break;
      }
      const std::uint32_t* src = pivots.data() + at * rows;
      const std::uint64_t factor = column[lead];
      for (std::size_t k = lead; k < rows; ++k)
        column[k] = static_cast<std::uint32_t>(
            (column[k] + (p - src[k]) * factor) % p);
    }
  }
  return rank;
}

void trim(HomologyVector& h) {
  while (!h.dims.empty() && h.dims.back() == 0) h.dims.pop_back();
}

/// Core computation; returns false when the face cap is exceeded.
bool homology_local(const LocalGraph& g, Prime p, std::uint64_t cap,
                    HomologyVector& out) {
  out = HomologyVector{{}, p.value};
  if (g.order() == 0) throw EmptySubset("independence complex on no vertices");
  FaceLevels faces = enumerate_faces(g, cap);
  if (faces.exceeded) return false;
  const auto& levels = faces.levels;
  const std::size_t top = levels.size();
  // rank[d] = rank of the boundary from dimension d to d-1; ∂_0 hits the
  // empty face.
  std::vector<std::uint64_t> rank(top + 1, 0);
  rank[0] = 1;
  for (std::size_t d = 1; d < top; ++d)
    rank[d] = p.value == 2
                  ? boundary_rank_gf2(levels[d], levels[d - 1])
                  : boundary_rank_gfp(levels[d], levels[d - 1], p.value);
  out.dims.resize(top);
  std::int64_t euler_homology = 0, euler_faces = -1;
  for (std::size_t d = 0; d < top; ++d) {
    const std::uint64_t f = levels[d].size();
    out.dims[d] = f - rank[d] - rank[d + 1];
    const std::int64_t sign = d % 2 == 0 ? 1 : -1;
    euler_homology += sign * static_cast<std::int64_t>(out.dims[d]);
    euler_faces += sign * static_cast<std::int64_t>(f);
  }
  if (euler_homology != euler_faces)
    throw std::logic_error("Euler characteristic mismatch in homology");
  if (out.dims[0] != complement_components(g) - 1)
    throw std::logic_error("H0 disagrees with 1-skeleton components");
  trim(out);
  return true;
}

std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

LocalGraph view_to_local(const IndependenceComplexView& view,
                         std::vector<Vertex>& members) {
  if (view.subset.size() != view.parent.order())
    throw SubsetOutOfRange("subset universe does not match the graph");
  members = subset_members(view.subset);
  if (members.empty()) throw EmptySubset("independence complex on no vertices");
  if (members.size() > 64) throw TooManyVertices(members.size(), 64);
  LocalGraph local;
  local.adjacency.assign(members.size(), 0);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      if (view.parent.adjacent(members[a], members[b]))
        local.adjacency[a] |= bit(b);
  return local;
}

}  // namespace

Prime make_prime(std::uint32_t p) {
  bool prime = p >= 2 && p < (1u << 16);
  for (std::uint32_t d = 2; prime && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime)
    throw PreconditionViolated("field characteristic " + std::to_string(p) +
                               " is not a prime below 65536");
  return Prime{p};
}

HomologyVector reduced_homology(const IndependenceComplexView& view, Prime p,
                                const HomologyOptions& options) {
  std::vector<Vertex> members;
  const LocalGraph local = view_to_local(view, members);
  HomologyVector out;
  if (!homology_local(local, p, options.face_cap, out))
    throw FaceLimitExceeded(members, options.face_cap);
  return out;
}

HomologyVector reduced_homology_masks(std::span<const std::uint64_t> adjacency,
                                      std::uint64_t subset, Prime p,
                                      const HomologyOptions& options) {
  if (subset == 0) throw EmptySubset("independence complex on no vertices");
  HomologyVector out;
  if (!homology_local(restrict_masks(adjacency, subset), p, options.face_cap,
                      out))
    throw FaceLimitExceeded(mask_members(subset), options.face_cap);
  return out;
}

std::int64_t reduced_euler_characteristic(const IndependenceComplexView& view) {
  std::vector<Vertex> members;
  const LocalGraph local = view_to_local(view, members);
  const FaceLevels faces =
      enumerate_faces(local, std::numeric_limits<std::uint64_t>::max());
  std::int64_t chi = -1;
  for (std::size_t d = 0; d < faces.levels.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) *
           static_cast<std::int64_t>(faces.levels[d].size());
  return chi;
}

namespace {

/// Mask-based working state for the reduction rules.
class Reducer {
 public:
  explicit Reducer(const BinaryMatrix& m)
      : row_(m.rows(), 0), col_(m.cols(), 0) {
    if (m.rows() > 64 || m.cols() > 64)
      throw TooManyVertices(std::max(m.rows(), m.cols()), 64);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c)) {
          row_[r] |= bit(c);
          col_[c] |= bit(r);
        }
    active_rows_ = m.rows() == 64 ? ~std::uint64_t{0} : bit(m.rows()) - 1;
    active_cols_ = m.cols() == 64 ? ~std::uint64_t{0} : bit(m.cols()) - 1;
  }

  ReductionOutcome run(const RuleOrder& order) {
    ReductionOutcome out;
    for (;;) {
      bool applied = false;
      for (ReductionRule rule : order) {
        if (rule == ReductionRule::kZeroLine && has_zero_line()) {
          out.acyclic = true;
          out.kept_rows.clear();
          out.kept_cols.clear();
          return out;
        }
        if (apply(rule, out)) {
          applied = true;
          break;
        }
      }
      if (!applied) break;
    }
    out.kept_rows = mask_members(active_rows_);
    out.kept_cols = mask_members(active_cols_);
    out.reduced = BinaryMatrix(out.kept_rows.size(), out.kept_cols.size());
    for (std::size_t i = 0; i < out.kept_rows.size(); ++i)
      for (std::size_t j = 0; j < out.kept_cols.size(); ++j)
        out.reduced.set(i, j, (row_[out.kept_rows[i]] >> out.kept_cols[j]) & 1);
    return out;
  }

 private:
  std::uint64_t row_ones(std::size_t r) const { return row_[r] & active_cols_; }
  std::uint64_t col_ones(std::size_t c) const { return col_[c] & active_rows_; }
  std::uint64_t row_zeros(std::size_t r) const {
    return active_cols_ & ~row_[r];
  }
  std::uint64_t col_zeros(std::size_t c) const {
    return active_rows_ & ~col_[c];
  }

  bool has_zero_line() const {
    for (std::uint64_t r = active_rows_; r; r &= r - 1)
      if (row_ones(std::countr_zero(r)) == 0) return true;
    for (std::uint64_t c = active_cols_; c; c &= c - 1)
      if (col_ones(std::countr_zero(c)) == 0) return true;
    return false;
  }

  void drop(MatrixSide side, std::size_t index, ReductionRule rule,
            ReductionOutcome& out) {
    (side == MatrixSide::kRow ? active_rows_ : active_cols_) &= ~bit(index);
    out.removed.push_back({side, index, rule});
  }

  bool apply(ReductionRule rule, ReductionOutcome& out) {
    const int rows = std::popcount(active_rows_);
    const int cols = std::popcount(active_cols_);
    switch (rule) {
      case ReductionRule::kZeroLine:
        return false;
      case ReductionRule::kIsolatedOne:
        if (rows == 1 && cols == 1) return false;
        for (std::uint64_t rs = active_rows_; rs; rs &= rs - 1) {
          const std::size_t r = std::countr_zero(rs);
          const std::uint64_t ones = row_ones(r);
          if (std::popcount(ones) != 1) continue;
          const std::size_t c = std::countr_zero(ones);
          if (std::popcount(col_ones(c)) != 1) continue;
          drop(MatrixSide::kRow, r, rule, out);
          drop(MatrixSide::kColumn, c, rule, out);
          ++out.degree_shift;
          return true;
        }
        return false;
      case ReductionRule::kFullLine:
        if (rows > 1)
          for (std::uint64_t rs = active_rows_; rs; rs &= rs - 1)
            if (row_zeros(std::countr_zero(rs)) == 0) {
              drop(MatrixSide::kRow, std::countr_zero(rs), rule, out);
              return true;
            }
        if (cols > 1)
          for (std::uint64_t cs = active_cols_; cs; cs &= cs - 1)
            if (col_zeros(std::countr_zero(cs)) == 0) {
              drop(MatrixSide::kColumn, std::countr_zero(cs), rule, out);
              return true;
            }
        return false;
      case ReductionRule::kUniqueZero:
        for (std::uint64_t rs = active_rows_; rs; rs &= rs - 1) {
          const std::size_t r = std::countr_zero(rs);
          const std::uint64_t zeros = row_zeros(r);
          if (std::popcount(zeros) == 1 &&
              std::popcount(col_zeros(std::countr_zero(zeros))) >= 2) {
            drop(MatrixSide::kRow, r, rule, out);
            return true;
          }
        }
        for (std::uint64_t cs = active_cols_; cs; cs &= cs - 1) {
          const std::size_t c = std::countr_zero(cs);
          const std::uint64_t zeros = col_zeros(c);
          if (std::popcount(zeros) == 1 &&
              std::popcount(row_zeros(std::countr_zero(zeros))) >= 2) {
            drop(MatrixSide::kColumn, c, rule, out);
            return true;
          }
        }
        return false;
      case ReductionRule::kDominatedZeros:
        for (std::uint64_t rs = active_rows_; rs; rs &= rs - 1) {
          const std::size_t r = std::countr_zero(rs);
          for (std::uint64_t os = active_rows_ & ~bit(r); os; os &= os - 1)
            if ((row_zeros(r) & ~row_zeros(std::countr_zero(os))) == 0) {
              drop(MatrixSide::kRow, r, rule, out);
              return true;
            }
        }
        for (std::uint64_t cs = active_cols_; cs; cs &= cs - 1) {
          const std::size_t c = std::countr_zero(cs);
          for (std::uint64_t os = active_cols_ & ~bit(c); os; os &= os - 1)
            if ((col_zeros(c) & ~col_zeros(std::countr_zero(os))) == 0) {
              drop(MatrixSide::kColumn, c, rule, out);
              return true;
            }
        }
        return false;
    }
    return false;
  }

  std::vector<std::uint64_t> row_;  // column bits holding a 1
  std::vector<std::uint64_t> col_;  // row bits holding a 1
  std::uint64_t active_rows_ = 0;
  std::uint64_t active_cols_ = 0;
};

}  // namespace

ReductionOutcome reduce_biadjacency(const BinaryMatrix& m,
                                    const RuleOrder& order) {
  if (m.rows() == 0 && m.cols() == 0)
    throw EmptySubset("reduction of an empty biadjacency matrix");
  return Reducer(m).run(order);
}

namespace {

HomologyVector reduced_from_outcome(const ReductionOutcome& outcome,
                                    std::size_t skeleton_components, Prime p,
                                    const HomologyOptions& options,
                                    const std::vector<std::size_t>& row_ids,
                                    const std::vector<std::size_t>& col_ids) {
  HomologyVector out{{}, p.value};
  if (outcome.acyclic) {
    if (skeleton_components != 1)
      throw std::logic_error("acyclic reduction with disconnected 1-skeleton");
    return out;
  }
  const BinaryMatrix& m = outcome.reduced;
  LocalGraph local;
  local.adjacency.assign(m.rows() + m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) {
        local.adjacency[i] |= bit(m.rows() + j);
        local.adjacency[m.rows() + j] |= bit(i);
      }
  HomologyVector base;
  if (!homology_local(local, p, options.face_cap, base)) {
    std::vector<std::size_t> offending;
    for (std::size_t r : outcome.kept_rows) offending.push_back(row_ids[r]);
    for (std::size_t c : outcome.kept_cols) offending.push_back(col_ids[c]);
    std::sort(offending.begin(), offending.end());
    throw FaceLimitExceeded(offending, options.face_cap);
  }
  const std::size_t shift = outcome.degree_shift;
  if (shift == 0 && base[0] != skeleton_components - 1)
    throw std::logic_error("H0 after reduction disagrees with 1-skeleton");
  out.dims.assign(base.dims.size() + shift, 0);
  out.dims.resize(std::max<std::size_t>(out.dims.size(), 1));
  out.dims[0] = skeleton_components - 1;
  for (std::size_t i = 0; i < base.dims.size(); ++i)
    if (i + shift >= 1) out.dims[i + shift] = base.dims[i];
  trim(out);
  return out;
}

}  // namespace

HomologyVector homology_with_reductions_masks(
    std::span<const std::uint64_t> adjacency, std::uint64_t subset,
    std::uint64_t x_side, Prime p, const HomologyOptions& options) {
  if (subset == 0) throw EmptySubset("independence complex on no vertices");
  const auto rows = mask_members(subset & x_side);
  const auto cols = mask_members(subset & ~x_side);
  for (std::size_t v : rows)
    if (adjacency[v] & subset & x_side)
      throw NotBipartite("edge inside side X of the supplied bipartition");
  for (std::size_t v : cols)
    if (adjacency[v] & subset & ~x_side)
      throw NotBipartite("edge inside side Y of the supplied bipartition");
  const std::size_t components =
      complement_components(restrict_masks(adjacency, subset));
  if (rows.empty() || cols.empty()) {
    // Edgeless: Δ is a simplex.
    if (components != 1)
      throw std::logic_error("simplex with disconnected 1-skeleton");
    return HomologyVector{{}, p.value};
  }
  BinaryMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.set(i, j, (adjacency[rows[i]] >> cols[j]) & 1);
  return reduced_from_outcome(reduce_biadjacency(m), components, p, options,
                              rows, cols);
}

HomologyVector homology_with_reductions(const IndependenceComplexView& view,
                                        const BipartiteView& bipartition,
                                        Prime p,
                                        const HomologyOptions& options) {
  std::vector<Vertex> members;
  const LocalGraph local = view_to_local(view, members);
  std::vector<bool> in_x(view.parent.order(), false), in_y(in_x);
  for (Vertex v : bipartition.side_x)
    if (v < in_x.size()) in_x[v] = true;
  for (Vertex v : bipartition.side_y)
    if (v < in_y.size()) in_y[v] = true;
  std::uint64_t x_side = 0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    const Vertex v = members[a];
    if (in_x[v] == in_y[v])
      throw NotBipartite("vertex " + std::to_string(v + 1) +
                         " is not on exactly one side of the bipartition");
    if (in_x[v]) x_side |= bit(a);
  }
  const std::uint64_t all = local.all();
  try {
    return homology_with_reductions_masks(local.adjacency, all, x_side, p,
                                          options);
  } catch (const FaceLimitExceeded& e) {
    std::vector<std::size_t> offending;
    for (std::size_t a : e.subset()) offending.push_back(members[a]);
    throw FaceLimitExceeded(offending, e.cap());
  }
}

}  // namespace hochster
