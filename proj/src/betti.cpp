#include "hochster/betti.hpp"

#include <bit>
#include <mutex>

#include "hochster/errors.hpp"
#include "hochster/parallel.hpp"

namespace hochster {

std::uint64_t BettiDiagram::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiDiagram::add(std::size_t i, std::size_t j, std::uint64_t count) {
  if (count != 0) entries_[{i, j}] += count;
}

void BettiDiagram::set(std::size_t i, std::size_t j, std::uint64_t count) {
  if (count == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = count;
}

std::size_t BettiDiagram::regularity() const {
  if (entries_.empty())
    throw EmptyIdeal("regularity of the zero ideal (graph without edges)");
  std::size_t reg = 0;
  for (const auto& [key, count] : entries_)
    reg = std::max(reg, key.second - key.first);
  return reg;
}

std::optional<std::size_t> BettiDiagram::max_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first.first;
}

std::optional<std::size_t> BettiDiagram::upper(std::size_t i) const {
  auto it = entries_.lower_bound({i + 1, 0});
  if (it == entries_.begin()) return std::nullopt;
  --it;
  if (it->first.first != i) return std::nullopt;
  return it->first.second;
}

std::optional<std::size_t> BettiDiagram::lower(std::size_t i) const {
  auto it = entries_.lower_bound({i, 0});
  if (it == entries_.end() || it->first.first != i) return std::nullopt;
  return it->first.second;
}

std::vector<std::pair<std::size_t, std::uint64_t>> multigraded_betti(
    const Graph& g, const VertexSet& w, Prime p) {
  const std::size_t size = w.count();
  if (size < 2)
    throw PreconditionViolated("multidegree support needs at least 2 vertices");
  const HomologyVector h = reduced_homology({g, w}, p);
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t k = h.dims.size(); k-- > 0;)
    if (h.dims[k] != 0) out.emplace_back(size - k - 2, h.dims[k]);
  return out;
}

namespace {

struct SweepContext {
  std::vector<std::uint64_t> adjacency;
  std::optional<std::uint64_t> x_side;  // set when reductions apply
  BettiOptions options;
  std::size_t n = 0;
};

SweepContext prepare(const Graph& g, const BettiOptions& options) {
  if (g.order() > options.max_vertices)
    throw TooManyVertices(g.order(), options.max_vertices);
  if (g.order() > 64) throw TooManyVertices(g.order(), 64);
  SweepContext ctx;
  ctx.adjacency = g.adjacency_masks();
  ctx.options = options;
  ctx.n = g.order();
  if (options.mode == SweepMode::kReductions) {
    auto bip = detect_bipartition(g);
    if (auto* view = std::get_if<BipartiteView>(&bip)) {
      std::uint64_t x = 0;
      for (Vertex v : view->side_x) x |= std::uint64_t{1} << v;
      ctx.x_side = x;
    }
  }
  return ctx;
}

/// Homology of Δ(G[W]), or nullopt when W is skipped as a cone.
std::optional<HomologyVector> subset_homology(const SweepContext& ctx,
                                              std::uint64_t w) {
  const HomologyOptions hopts{ctx.options.face_cap};
  if (ctx.options.mode == SweepMode::kReductions) {
    for (std::uint64_t rest = w; rest; rest &= rest - 1)
      if ((ctx.adjacency[std::countr_zero(rest)] & w) == 0) return std::nullopt;
    if (ctx.x_side)
      return homology_with_reductions_masks(ctx.adjacency, w, *ctx.x_side,
                                            ctx.options.field, hopts);
  }
  return reduced_homology_masks(ctx.adjacency, w, ctx.options.field, hopts);
}

constexpr std::uint64_t kChunk = 1024;

std::mutex observer_mutex;
DiagramObserver observer;

}  // namespace

BettiDiagram betti_diagram(const Graph& g, const BettiOptions& options) {
  const SweepContext ctx = prepare(g, options);
  const std::size_t n = ctx.n;
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned threads = resolve_threads(options.threads);
  // Per-worker dense tables indexed [i][j]; integer sums commute, so the
  // merged diagram does not depend on the schedule.
  const std::size_t width = n + 1;
  std::vector<std::vector<std::uint64_t>> tables(
      threads, std::vector<std::uint64_t>(width * width, 0));
  parallel_chunks(total, kChunk, threads,
                  [&](std::uint64_t begin, std::uint64_t end, unsigned id) {
                    auto& table = tables[id];
                    for (std::uint64_t w = begin; w < end; ++w) {
                      const std::size_t size = std::popcount(w);
                      if (size < 2) continue;
                      const auto h = subset_homology(ctx, w);
                      if (!h) continue;
                      for (std::size_t k = 0; k < h->dims.size(); ++k)
                        if (h->dims[k] != 0)
                          table[(size - k - 2) * width + size] += h->dims[k];
                    }
                  });
  BettiDiagram diagram(n, options.field.value);
  for (const auto& table : tables)
    for (std::size_t i = 0; i < width; ++i)
      for (std::size_t j = 0; j < width; ++j)
        diagram.add(i, j, table[i * width + j]);
  std::lock_guard lock(observer_mutex);
  if (observer) observer(g, diagram);
  return diagram;
}

void set_diagram_observer(DiagramObserver fn) {
  std::lock_guard lock(observer_mutex);
  observer = std::move(fn);
}

std::vector<MultigradedEntry> multigraded_entries(const Graph& g,
                                                  const BettiOptions& options,
                                                  std::size_t min_size,
                                                  std::size_t max_size) {
  const SweepContext ctx = prepare(g, options);
  const std::uint64_t total = std::uint64_t{1} << ctx.n;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<MultigradedEntry>> per_chunk(chunks);
  parallel_chunks(
      total, kChunk, options.threads,
      [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        auto& out = per_chunk[begin / kChunk];
        for (std::uint64_t w = begin; w < end; ++w) {
          const std::size_t size = std::popcount(w);
          if (size < std::max<std::size_t>(2, min_size) || size > max_size)
            continue;
          const auto h = subset_homology(ctx, w);
          if (!h) continue;
          for (std::size_t k = h->dims.size(); k-- > 0;) {
            if (h->dims[k] == 0) continue;
            VertexSet support(ctx.n);
            for (std::uint64_t rest = w; rest; rest &= rest - 1)
              support.set(std::countr_zero(rest));
            out.push_back({size - k - 2, std::move(support), h->dims[k]});
          }
        }
      });
  std::vector<MultigradedEntry> all;
  for (auto& chunk : per_chunk)
    for (auto& e : chunk) all.push_back(std::move(e));
  return all;
}

std::size_t regularity(const BettiDiagram& d) { return d.regularity(); }

bool check_propagation(const BettiDiagram& d) {
  for (const auto& [key, count] : d.entries()) {
    const auto [a, b] = key;
    // (a, b) = (i + 1, j + 2) with j >= i + 2.
    if (a == 0 || b < a + 3) continue;
    if (d.at(a - 1, b - 2) == 0 && d.at(a - 1, b - 1) == 0) return false;
  }
  return true;
}

std::vector<StrandExtrema> strand_extrema(const BettiDiagram& d) {
  std::vector<StrandExtrema> out;
  for (const auto& [key, count] : d.entries()) {
    const auto [i, j] = key;
    if (out.empty() || out.back().i != i)
      out.push_back({i, j, j});
    else
      out.back().upper = j;
  }
  return out;
}

bool check_strand_bounds(const BettiDiagram& d) {
  const auto extrema = strand_extrema(d);
  if (extrema.empty()) return true;
  const std::size_t l0 = extrema.front().lower;
  for (std::size_t k = 0; k < extrema.size(); ++k) {
    if (extrema[k].i != k) return false;  // columns must be contiguous from 0
    if (extrema[k].lower < l0 + k) return false;
    if (k > 0 && extrema[k].upper > extrema[k - 1].upper + 2) return false;
  }
  return true;
}

}  // namespace hochster
