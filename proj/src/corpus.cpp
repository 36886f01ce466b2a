#include "hochster/corpus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

constexpr std::size_t kMaxCodeVertices = 11;

// Bit position of the pair {u, v}, u < v.
std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

Graph random_bipartite_once(std::size_t n, std::mt19937_64& rng) {
  const std::size_t a = 1 + rng() % (n - 1);
  const std::uint64_t percent = 25 + rng() % 55;
  Graph g(n);
  for (std::size_t x = 0; x < a; ++x)
    for (std::size_t y = a; y < n; ++y)
      if (rng() % 100 < percent) g.add_edge(x, y);
  return g;
}

Graph random_connected_bipartite_graph(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_bipartite_once(n, rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxCodeVertices) throw TooManyVertices(n, kMaxCodeVertices);
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

std::uint64_t graph_code(const Graph& g) {
  if (g.order() > kMaxCodeVertices)
    throw TooManyVertices(g.order(), kMaxCodeVertices);
  std::uint64_t code = 0;
  for (const auto& [u, v] : g.edges())
    code |= std::uint64_t{1} << pair_index(g.order(), u, v);
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 8) throw TooManyVertices(n, 8);
  const auto edges = g.edges();
  std::array<std::size_t, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const auto& [u, v] : edges) {
      const auto a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
      code |= std::uint64_t{1} << pair_index(n, a, b);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

std::vector<Graph> isomorphism_representatives(std::size_t n) {
  if (n > 6) throw TooManyVertices(n, 6);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Graph g = graph_from_code(n, code);
    if (canonical_code(g) == code) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> one_vertex_extensions(std::size_t n) {
  std::vector<Graph> out;
  for (const Graph& base : isomorphism_representatives(n))
    for (std::uint64_t nbhd = 0; nbhd < (std::uint64_t{1} << n); ++nbhd) {
      Graph g(n + 1);
      for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
      for (std::size_t v = 0; v < n; ++v)
        if (nbhd >> v & 1) g.add_edge(v, n);
      out.push_back(std::move(g));
    }
  return out;
}

std::vector<Graph> connected_bipartite_graphs(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t a = 1; 2 * a <= max_vertices; ++a)
    for (std::size_t b = a; a + b <= max_vertices; ++b) {
      if (a * b > 63) throw TooManyVertices(a + b, max_vertices);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (a * b));
           ++bits) {
        Graph g(a + b);
        for (std::size_t k = 0; k < a * b; ++k)
          if (bits >> k & 1) g.add_edge(k / b, a + k % b);
        if (is_connected(g)) out.push_back(std::move(g));
      }
    }
  return out;
}

std::vector<Graph> random_connected_bipartite(std::size_t count,
                                              std::size_t min_vertices,
                                              std::size_t max_vertices,
                                              std::uint64_t seed) {
  if (min_vertices < 2 || min_vertices > max_vertices)
    throw PreconditionViolated("random corpus needs 2 <= min <= max vertices");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n =
        min_vertices + rng() % (max_vertices - min_vertices + 1);
    out.push_back(random_connected_bipartite_graph(n, rng));
  }
  return out;
}

std::vector<QuadraticIdeal> quadratic_ideals(std::size_t max_vars,
                                             std::size_t max_squares) {
  std::vector<QuadraticIdeal> out;
  for (std::size_t n = 1; n <= max_vars; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = graph_from_code(n, code);
      if (!is_connected(g) ||
          !std::holds_alternative<BipartiteView>(detect_bipartition(g)))
        continue;
      std::set<Edge> edges;
      for (const auto& e : g.edges()) edges.insert(e);
      for (std::uint64_t sq = 1; sq < (std::uint64_t{1} << n); ++sq) {
        if (static_cast<std::size_t>(std::popcount(sq)) > max_squares)
          continue;
        std::set<std::size_t> squares;
        for (std::size_t v = 0; v < n; ++v)
          if (sq >> v & 1) squares.insert(v);
        out.push_back(make_quadratic_ideal(n, std::move(squares), edges));
      }
    }
  }
  return out;
}

std::vector<QuadraticIdeal> random_quadratic_ideals(std::size_t count,
                                                    std::size_t min_vars,
                                                    std::size_t max_vars,
                                                    std::uint64_t seed) {
  if (min_vars < 2 || min_vars > max_vars)
    throw PreconditionViolated("random ideals need 2 <= min <= max variables");
  std::mt19937_64 rng(seed);
  std::vector<QuadraticIdeal> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = min_vars + rng() % (max_vars - min_vars + 1);
    const Graph g = random_connected_bipartite_graph(n, rng);
    std::set<Edge> edges;
    for (const auto& e : g.edges()) edges.insert(e);
    const std::size_t wanted = 1 + rng() % 3;
    std::set<std::size_t> squares;
    while (squares.size() < wanted) squares.insert(rng() % n);
    out.push_back(make_quadratic_ideal(n, std::move(squares), std::move(edges)));
  }
  return out;
}

}  // namespace hochster
