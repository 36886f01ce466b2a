#include <doctest.h>

#include <random>

#include "hochster/corpus.hpp"
#include "hochster/errors.hpp"
#include "hochster/graph.hpp"
#include "oracles.hpp"

using namespace hochster;

TEST_SUITE("graph_core") {

TEST_CASE("basic container") {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionViolated);
  CHECK_THROWS_AS(g.add_edge(0, 9), SubsetOutOfRange);
  g.remove_edge(0, 2);
  CHECK(g.size() == 1);
  CHECK(g.label(0) == "1");
}

TEST_CASE("complement is an involution") {
  for (std::uint64_t code = 0; code < (1u << pair_count(5)); code += 7) {
    const Graph g = graph_from_code(5, code);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() == pair_count(5));
  }
}

TEST_CASE("bipartition detection") {
  CHECK(std::holds_alternative<BipartiteView>(detect_bipartition(cycle_graph(6))));
  const auto odd = detect_bipartition(cycle_graph(5));
  REQUIRE(std::holds_alternative<OddClosedWalk>(odd));
  const auto& walk = std::get<OddClosedWalk>(odd).walk;
  CHECK(walk.front() == walk.back());
  CHECK((walk.size() - 1) % 2 == 1);
  for (std::size_t k = 0; k + 1 < walk.size(); ++k)
    CHECK(cycle_graph(5).adjacent(walk[k], walk[k + 1]));
  CHECK_THROWS_AS(require_bipartition(complete_graph(3)), NotBipartite);

  // against the 2-coloring oracle
  for (std::uint64_t code = 0; code < (1u << pair_count(6)); code += 3) {
    const Graph g = graph_from_code(6, code);
    CHECK(std::holds_alternative<BipartiteView>(detect_bipartition(g)) ==
          oracle::bipartite(g));
  }
}

TEST_CASE("bipartite complement") {
  // examples: C_6^bc = 3K_2, K_{n,m}^bc has no edges
  const Graph c6bc = bipartite_complement(cycle_graph(6));
  CHECK(c6bc.size() == 3);
  CHECK(induced_matching_number(c6bc) == 3);
  CHECK(bipartite_complement(complete_bipartite_graph(2, 3)).size() == 0);
  CHECK_THROWS_AS(bipartite_complement(cycle_graph(5)), NotBipartite);
  CHECK_THROWS_AS(bipartite_complement(matching_graph(2)), NotConnected);
  const Graph two = matching_graph(2);
  const auto view = make_bipartite_view(two, {0, 2}, {1, 3});
  CHECK(bipartite_complement(two, view, true).size() == 2);

  // involution with a fixed view
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    BinaryMatrix m(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m.set(r, c, rng() % 2);
    const Graph g = graph_from_biadjacency(m);
    const auto v = make_bipartite_view(g, {0, 1, 2}, {3, 4, 5, 6});
    CHECK(v.biadjacency == m);
    const Graph bc = bipartite_complement(g, v, true);
    CHECK(make_bipartite_view(bc, {0, 1, 2}, {3, 4, 5, 6}).biadjacency ==
          m.complemented());
    CHECK(bipartite_complement(bc, make_bipartite_view(bc, {0, 1, 2}, {3, 4, 5, 6}),
                               true) == g);
  }
}

TEST_CASE("make_bipartite_view rejects bad sides") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(make_bipartite_view(g, {0, 1}, {2}), NotBipartite);
  CHECK_THROWS_AS(make_bipartite_view(g, {0}, {1}), NotBipartite);
  CHECK_NOTHROW(make_bipartite_view(g, {0, 2}, {1}));
}

TEST_CASE("chordality matches the induced-cycle oracle on all graphs <= 6") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n));
         ++code) {
      const Graph g = graph_from_code(n, code);
      const bool chordal = is_chordal(g);
      CHECK(chordal == !min_induced_cycle(g, 4).has_value());
      if (n <= 5 || code % 5 == 0) CHECK(chordal == oracle::chordal(g));
    }
}

TEST_CASE("chordality vs min_induced_cycle on 7 and 8 vertices") {
  for (const Graph& g : one_vertex_extensions(6))
    CHECK(is_chordal(g) == !min_induced_cycle(g, 4).has_value());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 3000; ++k) {
    const Graph g = graph_from_code(8, rng() & ((std::uint64_t{1} << 28) - 1));
    CHECK(is_chordal(g) == !min_induced_cycle(g, 4).has_value());
  }
}

TEST_CASE("induced cycle counts match subset enumeration") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 5 + rng() % 6;  // up to 10 vertices
    const Graph g = graph_from_code(n, rng() & ((std::uint64_t{1} << pair_count(n)) - 1));
    for (std::size_t t = 3; t <= n; ++t) {
      const auto found = find_induced_cycles(g, t, 1000);
      CHECK(found.count == oracle::induced_cycles(g, t));
      CHECK(found.witnesses.size() == found.count);
      for (const auto& w : found.witnesses)
        CHECK(oracle::induced_cycles(induced_subgraph(g, w), t) == 1);
    }
  }
  CHECK(count_induced_cycles(cycle_graph(7), 7) == 1);
  CHECK(count_induced_cycles(complete_graph(5), 3) == 10);
  CHECK(count_induced_cycles(complete_bipartite_graph(3, 3), 4) == 9);
}

TEST_CASE("min_induced_cycle") {
  CHECK(min_induced_cycle(cycle_graph(6), 4) == 6);
  CHECK(!min_induced_cycle(cycle_graph(6), 7));
  CHECK(!min_induced_cycle(path_graph(6), 4));
  CHECK(min_induced_cycle(complete_bipartite_graph(3, 3), 4) == 4);
  CHECK_THROWS_AS(min_induced_cycle(cycle_graph(5), 3), PreconditionViolated);
  // bipartite graphs only have even induced cycles
  for (const Graph& g : connected_bipartite_graphs(7)) {
    const auto t = min_induced_cycle(g, 4);
    if (t) CHECK(*t % 2 == 0);
  }
}

TEST_CASE("induced matching number matches brute force") {
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 300) {
    const std::size_t n = 4 + rng() % 6;
    const Graph g = graph_from_code(n, rng() & ((std::uint64_t{1} << pair_count(n)) - 1));
    if (g.size() > 18) continue;
    ++tested;
    const std::size_t mu = induced_matching_number(g);
    CHECK(mu == oracle::induced_matching(g));
    CHECK((mu >= 1) == (g.size() > 0));
  }
  CHECK(induced_matching_number(matching_graph(4)) == 4);
  CHECK(induced_matching_number(cycle_graph(6)) == 2);
}

TEST_CASE("components and connectivity") {
  const Graph g = disjoint_union(path_graph(3), Graph(2));
  CHECK(connected_components(g).size() == 3);
  CHECK(nonisolated_component_count(g) == 1);
  CHECK(!is_connected(g));
  CHECK(is_connected(cycle_graph(5)));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const Graph h = graph_from_code(7, rng() & ((std::uint64_t{1} << 21) - 1));
    CHECK(connected_components(h).size() == oracle::components(h, 127));
  }
}

TEST_CASE("induced subgraph keeps labels") {
  Graph g = cycle_graph(5);
  g.set_labels({"a", "b", "c", "d", "e"});
  const std::vector<Vertex> w{1, 2, 4};
  const Graph h = induced_subgraph(g, w);
  CHECK(h.order() == 3);
  CHECK(h.size() == 1);
  CHECK(h.label(2) == "e");
}

}  // TEST_SUITE
