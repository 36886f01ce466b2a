#include "hochster/graph.hpp"

#include <algorithm>
#include <list>
#include <queue>
#include <sstream>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> lists(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& row = g.neighbors(u);
    for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v))
      lists[u].push_back(v);
  }
  return lists;
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {
  if (n > kMaxGraphVertices)
    throw TooManyVertices(n, kMaxGraphVertices);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order())
    throw SubsetOutOfRange("vertex " + std::to_string(v + 1) +
                           " out of range for graph on " +
                           std::to_string(order()) + " vertices");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw PreconditionViolated("loop at vertex " + std::to_string(u + 1) +
                               " in a simple graph");
  if (adjacency_[u][v]) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacency_[u][v]) return;
  adjacency_[u].reset(v);
  adjacency_[v].reset(u);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    const auto& row = adjacency_[u];
    for (auto v = row.find_next(u); v != VertexSet::npos; v = row.find_next(v))
      out.emplace_back(u, v);
  }
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex u) const {
  if (order() > 64)
    throw TooManyVertices(order(), 64);
  std::uint64_t mask = 0;
  boost::to_block_range(adjacency_[u], &mask);
  return mask;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  std::vector<std::uint64_t> masks(order());
  for (Vertex u = 0; u < order(); ++u) masks[u] = neighbor_mask(u);
  return masks;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order())
    throw PreconditionViolated("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

BinaryMatrix BinaryMatrix::complemented() const {
  BinaryMatrix out = *this;
  for (auto& entry : out.data_) entry ^= 1;
  return out;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, (*this)(r, c));
  return out;
}

BipartiteView make_bipartite_view(const Graph& g, std::vector<Vertex> side_x,
                                  std::vector<Vertex> side_y) {
  std::vector<int> side(g.order(), -1);
  auto assign = [&](const std::vector<Vertex>& vs, int s) {
    for (Vertex v : vs) {
      if (v >= g.order())
        throw SubsetOutOfRange("bipartition vertex " + std::to_string(v + 1) +
                               " out of range");
      if (side[v] != -1)
        throw NotBipartite("vertex " + std::to_string(v + 1) +
                           " listed twice in bipartition");
      side[v] = s;
    }
  };
  assign(side_x, 0);
  assign(side_y, 1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (side[v] == -1)
      throw NotBipartite("vertex " + std::to_string(v + 1) +
                         " missing from bipartition");
  for (const auto& [u, v] : g.edges())
    if (side[u] == side[v])
      throw NotBipartite("edge {" + std::to_string(u + 1) + "," +
                         std::to_string(v + 1) + "} inside one side");

  BipartiteView view{std::move(side_x), std::move(side_y), {}};
  view.biadjacency = BinaryMatrix(view.side_x.size(), view.side_y.size());
  for (std::size_t i = 0; i < view.side_x.size(); ++i)
    for (std::size_t j = 0; j < view.side_y.size(); ++j)
      view.biadjacency.set(i, j, g.adjacent(view.side_x[i], view.side_y[j]));
  return view;
}

Graph graph_from_biadjacency(const BinaryMatrix& m) {
  Graph g(m.rows() + m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) g.add_edge(i, m.rows() + j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.rows(); ++i)
    labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < m.cols(); ++j)
    labels.push_back("y" + std::to_string(j + 1));
  g.set_labels(std::move(labels));
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

BipartitionResult detect_bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      const auto& row = g.neighbors(u);
      for (auto w = row.find_first(); w != VertexSet::npos;
           w = row.find_next(w)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          queue.push(w);
        } else if (color[w] == color[u]) {
          // u -> root -> w -> u has odd length.
          OddClosedWalk odd;
          for (Vertex a = u;; a = parent[a]) {
            odd.walk.push_back(a);
            if (a == root) break;
          }
          std::vector<Vertex> tail;
          for (Vertex b = w; b != root; b = parent[b]) tail.push_back(b);
          odd.walk.insert(odd.walk.end(), tail.rbegin(), tail.rend());
          odd.walk.push_back(u);
          return odd;
        }
      }
    }
  }
  std::vector<Vertex> xs, ys;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? xs : ys).push_back(v);
  return make_bipartite_view(g, std::move(xs), std::move(ys));
}

BipartiteView require_bipartition(const Graph& g) {
  auto result = detect_bipartition(g);
  if (auto* odd = std::get_if<OddClosedWalk>(&result)) {
    std::ostringstream msg;
    msg << "graph is not bipartite: odd closed walk";
    for (Vertex v : odd->walk) msg << ' ' << g.label(v);
    throw NotBipartite(msg.str());
  }
  return std::get<BipartiteView>(std::move(result));
}

Graph bipartite_complement(const Graph& g, const BipartiteView& view,
                           bool allow_disconnected) {
  // Revalidates the sides against g and rebuilds the matrix.
  BipartiteView checked = make_bipartite_view(g, view.side_x, view.side_y);
  if (!allow_disconnected && !is_connected(g))
    throw NotConnected(
        "bipartite complement of a disconnected graph depends on the chosen "
        "bipartition");
  Graph out(g.order());
  for (std::size_t i = 0; i < checked.side_x.size(); ++i)
    for (std::size_t j = 0; j < checked.side_y.size(); ++j)
      if (!checked.biadjacency(i, j))
        out.add_edge(checked.side_x[i], checked.side_y[j]);
  out.set_labels(g.labels());
  return out;
}

Graph bipartite_complement(const Graph& g) {
  return bipartite_complement(g, require_bipartition(g));
}

VertexSet make_subset(std::size_t n, std::span<const Vertex> members) {
  VertexSet w(n);
  for (Vertex v : members) {
    if (v >= n)
      throw SubsetOutOfRange("vertex " + std::to_string(v + 1) +
                             " out of range for graph on " + std::to_string(n) +
                             " vertices");
    w.set(v);
  }
  return w;
}

std::vector<Vertex> subset_members(const VertexSet& w) {
  std::vector<Vertex> out;
  out.reserve(w.count());
  for (auto v = w.find_first(); v != VertexSet::npos; v = w.find_next(v))
    out.push_back(v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.size() != g.order())
    throw SubsetOutOfRange("subset universe has " + std::to_string(w.size()) +
                           " vertices, graph has " + std::to_string(g.order()));
  const auto members = subset_members(w);
  Graph out(members.size());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (g.adjacent(members[a], members[b])) out.add_edge(a, b);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : members) labels.push_back(g.labels()[v]);
    out.set_labels(std::move(labels));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
  return induced_subgraph(g, make_subset(g.order(), w));
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

namespace {

std::vector<Vertex> lex_bfs_order(const Graph& g) {
  struct Cell {
    std::list<Vertex> members;
    std::size_t stamp = static_cast<std::size_t>(-1);
    std::list<Cell>::iterator twin;
  };
  const std::size_t n = g.order();
  std::list<Cell> cells;
  std::vector<std::list<Cell>::iterator> cell_of(n);
  std::vector<std::list<Vertex>::iterator> position(n);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  if (n == 0) return order;

  cells.emplace_back();
  for (Vertex v = 0; v < n; ++v) {
    cells.front().members.push_back(v);
    cell_of[v] = cells.begin();
    position[v] = std::prev(cells.front().members.end());
  }
  for (std::size_t step = 0; step < n; ++step) {
    auto front = cells.begin();
    Vertex v = front->members.front();
    front->members.pop_front();
    if (front->members.empty()) cells.erase(front);
    numbered[v] = true;
    order.push_back(v);
    const auto& row = g.neighbors(v);
    for (auto w = row.find_first(); w != VertexSet::npos;
         w = row.find_next(w)) {
      if (numbered[w]) continue;
      auto cell = cell_of[w];
      if (cell->stamp != step) {
        cell->stamp = step;
        cell->twin = cells.emplace(cell);
      }
      auto twin = cell->twin;
      cell->members.erase(position[w]);
      twin->members.push_back(w);
      position[w] = std::prev(twin->members.end());
      cell_of[w] = twin;
      if (cell->members.empty()) cells.erase(cell);
    }
  }
  return order;
}

}  // namespace

bool is_chordal(const Graph& g) {
  const auto order = lex_bfs_order(g);
  std::vector<std::size_t> rank(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  // Reverse LexBFS order is a perfect elimination ordering iff g is chordal:
  // the earlier-visited neighbors of v, minus the latest of them, must all be
  // adjacent to that latest one.
  for (Vertex v : order) {
    const auto& row = g.neighbors(v);
    std::optional<Vertex> parent;
    for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
      if (rank[w] < rank[v] && (!parent || rank[w] > rank[*parent])) parent = w;
    if (!parent) continue;
    for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w))
      if (rank[w] < rank[v] && w != *parent && !g.adjacent(w, *parent))
        return false;
  }
  return true;
}

namespace {

/// Depth-first search over induced paths whose smallest vertex is the start;
/// each induced t-cycle is reached exactly once (second vertex smaller than
/// the last one).
class InducedCycleSearch {
 public:
  InducedCycleSearch(const Graph& g, std::size_t t)
      : g_(g), lists_(adjacency_lists(g)), t_(t),
        in_path_(g.order(), false), blocked_(g.order(), 0) {}

  /// Visits every induced t-cycle; `visit` returns false to stop early.
  template <class Visit>
  void run(Visit&& visit) {
    if (t_ < 3 || t_ > g_.order()) return;
    for (Vertex start = 0; start + t_ <= g_.order(); ++start) {
      path_.assign(1, start);
      in_path_[start] = true;
      extend(visit);
      in_path_[start] = false;
      if (stop_) return;
    }
  }

 private:
  template <class Visit>
  void extend(Visit& visit) {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    const std::size_t next_pos = path_.size();
    for (Vertex w : lists_[last]) {
      if (stop_) return;
      if (w <= start || in_path_[w] || blocked_[w] != 0) continue;
      const bool touches_start = g_.adjacent(w, start);
      const bool closing = next_pos + 1 == t_;
      if (next_pos >= 2 && touches_start != closing) continue;
      if (closing) {
        if (!touches_start || path_[1] > w) continue;
        path_.push_back(w);
        if (!visit(path_)) stop_ = true;
        path_.pop_back();
        continue;
      }
      // Interior vertices (all but start and the new endpoint) must not see w
      // again; `last` joins the interior now.
      if (next_pos >= 2) bump(last, +1);
      path_.push_back(w);
      in_path_[w] = true;
      extend(visit);
      in_path_[w] = false;
      path_.pop_back();
      if (next_pos >= 2) bump(last, -1);
    }
  }

  void bump(Vertex v, int delta) {
    for (Vertex u : lists_[v]) blocked_[u] += delta;
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t t_;
  std::vector<Vertex> path_;
  std::vector<bool> in_path_;
  std::vector<int> blocked_;
  bool stop_ = false;
};

}  // namespace

std::optional<std::size_t> min_induced_cycle(const Graph& g,
                                             std::size_t min_len) {
  if (min_len < 4)
    throw PreconditionViolated("min_induced_cycle requires min_len >= 4");
  for (std::size_t t = min_len; t <= g.order(); ++t) {
    bool found = false;
    InducedCycleSearch(g, t).run([&](const std::vector<Vertex>&) {
      found = true;
      return false;
    });
    if (found) return t;
  }
  return std::nullopt;
}

InducedCycles find_induced_cycles(const Graph& g, std::size_t t,
                                  std::size_t witness_cap) {
  if (t < 3)
    throw PreconditionViolated("a cycle has at least 3 vertices");
  InducedCycles out;
  InducedCycleSearch(g, t).run([&](const std::vector<Vertex>& path) {
    ++out.count;
    if (out.witnesses.size() < witness_cap) {
      auto members = path;
      std::sort(members.begin(), members.end());
      out.witnesses.push_back(std::move(members));
    }
    return true;
  });
  return out;
}

std::uint64_t count_induced_cycles(const Graph& g, std::size_t t) {
  return find_induced_cycles(g, t, 0).count;
}

namespace {

class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Graph& g)
      : g_(g), lists_(adjacency_lists(g)), edges_(g.edges()),
        closed_(g.order(), 0) {}

  std::size_t solve() {
    search(0, 0);
    return best_;
  }

 private:
  bool eligible(const Edge& e) const {
    return closed_[e.first] == 0 && closed_[e.second] == 0;
  }

  void close(const Edge& e, int delta) {
    for (Vertex end : {e.first, e.second}) {
      closed_[end] += delta;
      for (Vertex u : lists_[end]) closed_[u] += delta;
    }
  }

  void search(std::size_t index, std::size_t chosen) {
    best_ = std::max(best_, chosen);
    // Bound: every further edge needs two fresh open vertices.
    std::size_t open_vertices = 0;
    std::vector<bool> seen(g_.order(), false);
    for (std::size_t k = index; k < edges_.size(); ++k) {
      if (!eligible(edges_[k])) continue;
      for (Vertex v : {edges_[k].first, edges_[k].second})
        if (!seen[v]) {
          seen[v] = true;
          ++open_vertices;
        }
    }
    if (chosen + open_vertices / 2 <= best_) return;
    while (index < edges_.size() && !eligible(edges_[index])) ++index;
    if (index == edges_.size()) return;
    const Edge& e = edges_[index];
    close(e, +1);
    search(index + 1, chosen + 1);
    close(e, -1);
    search(index + 1, chosen);
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<Edge> edges_;
  std::vector<int> closed_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t induced_matching_number(const Graph& g) {
  return InducedMatchingSearch(g).solve();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component{root};
    seen[root] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      const auto& row = g.neighbors(component[head]);
      for (auto w = row.find_first(); w != VertexSet::npos;
           w = row.find_next(w))
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::size_t nonisolated_component_count(const Graph& g) {
  std::size_t k = 0;
  for (const auto& c : connected_components(g))
    if (c.size() > 1) ++k;
  return k;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionViolated("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph complete_bipartite_graph(std::size_t n, std::size_t m) {
  return graph_from_biadjacency(BinaryMatrix(n, m, true));
}

Graph matching_graph(std::size_t m) {
  Graph g(2 * m);
  for (Vertex k = 0; k < m; ++k) g.add_edge(2 * k, 2 * k + 1);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace hochster
