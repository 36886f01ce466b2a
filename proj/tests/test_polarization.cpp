#include <doctest.h>

#include <random>

#include "hochster/betti.hpp"
#include "hochster/corpus.hpp"
#include "hochster/errors.hpp"
#include "hochster/polarization.hpp"
#include "oracles.hpp"

using namespace hochster;

namespace {

QuadraticIdeal worked_example() {
  // x1^2, x1x5, x2x5, x2x7, x3x5, x3x6, x3x7, x4x6
  return make_quadratic_ideal(7, {0},
                              {{0, 4}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 5}});
}

std::vector<oracle::Exponents> generators(const QuadraticIdeal& ideal) {
  std::vector<oracle::Exponents> gens;
  for (std::size_t v : ideal.squares) {
    oracle::Exponents e(ideal.n_vars, 0);
    e[v] = 2;
    gens.push_back(e);
  }
  for (const auto& [u, v] : ideal.edges) {
    oracle::Exponents e(ideal.n_vars, 0);
    e[u] = e[v] = 1;
    gens.push_back(e);
  }
  return gens;
}

oracle::MultiDiagram folded(const NonsquarefreeBetti& b) {
  oracle::MultiDiagram out;
  for (const auto& e : b.multigraded) {
    oracle::Exponents x(e.multidegree.begin(), e.multidegree.end());
    out[{e.i, x}] += e.count;
  }
  return out;
}

oracle::Diagram as_map(const BettiDiagram& d) {
  oracle::Diagram m;
  for (const auto& [k, v] : d.entries()) m[k] = v;
  return m;
}

}  // namespace

TEST_SUITE("polarization") {

TEST_CASE("constructing ideals") {
  CHECK_THROWS_AS(make_quadratic_ideal(2, {}, {{0, 1}}), PreconditionViolated);
  CHECK_THROWS_AS(make_quadratic_ideal(2, {2}, {}), SubsetOutOfRange);
  CHECK_THROWS_AS(make_quadratic_ideal(2, {0}, {{0, 2}}), SubsetOutOfRange);
  CHECK_THROWS_AS(make_quadratic_ideal(2, {0}, {{1, 1}}), PreconditionViolated);
  const auto ideal = make_quadratic_ideal(3, {0}, {{2, 1}});
  CHECK(ideal.edges == std::set<Edge>{{1, 2}});
}

TEST_CASE("polarize examples") {
  const Polarization single = polarize(make_quadratic_ideal(1, {0}, {}));
  CHECK(single.graph.order() == 2);
  CHECK(single.graph.edges() == std::vector<Edge>{{0, 1}});
  CHECK(single.graph.label(1) == "y1");

  const Polarization path = polarize(make_quadratic_ideal(2, {0}, {{0, 1}}));
  CHECK(path.graph.order() == 3);
  CHECK(path.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(path.origin == std::vector<std::size_t>{0, 1, 0});

  const Polarization ex = polarize(worked_example());
  CHECK(ex.graph.order() == 8);
  CHECK(ex.graph.size() == 8);
  CHECK(ex.origin.back() == 0);
}

TEST_CASE("diagram examples") {
  CHECK(as_map(betti_nonsquarefree(make_quadratic_ideal(1, {0}, {})).diagram) ==
        oracle::Diagram{{{0, 2}, 1}});
  CHECK(as_map(betti_nonsquarefree(make_quadratic_ideal(2, {0, 1}, {})).diagram) ==
        oracle::Diagram{{{0, 2}, 2}, {{1, 4}, 1}});
  const BettiDiagram ex = betti_nonsquarefree(worked_example()).diagram;
  CHECK(ex.at(2, 6) == 1);
  CHECK(as_map(ex) == oracle::betti(polarize(worked_example()).graph, 3));
}

TEST_CASE("depolarized multidegrees match the monomial oracle") {
  std::vector<QuadraticIdeal> ideals{
      make_quadratic_ideal(1, {0}, {}),
      make_quadratic_ideal(2, {0, 1}, {}),
      make_quadratic_ideal(2, {0}, {{0, 1}}),
      make_quadratic_ideal(3, {1}, {{0, 1}, {1, 2}}),
      make_quadratic_ideal(4, {0, 3}, {{0, 1}, {1, 2}, {2, 3}}),
  };
  for (const auto& ideal : quadratic_ideals(4, 2))
    if (ideal.n_vars == 4 && ideals.size() < 60) ideals.push_back(ideal);
  for (const auto& ideal : random_quadratic_ideals(10, 5, 6, 3)) ideals.push_back(ideal);
  for (const auto& ideal : ideals) {
    for (std::uint32_t p : {2u, 3u}) {
      BettiOptions o;
      o.field = Prime{p};
      const auto nsq = betti_nonsquarefree(ideal, o, true);
      const auto truth = oracle::monomial_betti(generators(ideal), ideal.n_vars, p);
      CHECK(folded(nsq) == truth);
      // graded totals agree as well
      oracle::Diagram graded;
      for (const auto& [key, v] : truth) {
        std::size_t deg = 0;
        for (int e : key.second) deg += e;
        graded[{key.first, deg}] += v;
      }
      CHECK(as_map(nsq.diagram) == graded);
    }
  }
}

TEST_CASE("totally disjoint edges") {
  const LoopedGraph ex = looped_graph(worked_example());
  const DisjointTriples triples = totally_disjoint_triples(ex);
  CHECK(triples.count == 1);
  REQUIRE(triples.witnesses.size() == 1);
  // the loop at x1 with x2x7 and x4x6
  CHECK(triples.witnesses[0] ==
        std::array<LoopedEdge, 3>{LoopedEdge{0, 0}, LoopedEdge{1, 6}, LoopedEdge{3, 5}});

  const LoopedGraph three{matching_graph(3), std::vector<bool>(6, false)};
  CHECK(totally_disjoint_triples(three).count == 1);
  const LoopedGraph k4{complete_graph(4), std::vector<bool>(4, false)};
  CHECK(totally_disjoint_triples(k4).count == 0);
  CHECK(!has_totally_disjoint_pair(k4));

  // a loop is totally disjoint from e iff it avoids e and its neighbours
  LoopedGraph p{path_graph(4), {true, false, false, true}};
  CHECK(!totally_disjoint(p, {0, 0}, {1, 2}));
  CHECK(totally_disjoint(p, {0, 0}, {2, 3}));
  CHECK(totally_disjoint(p, {0, 0}, {3, 3}));
  CHECK(has_totally_disjoint_pair(p));
}

TEST_CASE("loop disjointness agrees with the polarized whisker") {
  std::mt19937_64 rng(6);
  for (const auto& ideal : random_quadratic_ideals(60, 4, 7, 9)) {
    const LoopedGraph lg = looped_graph(ideal);
    const Polarization pol = polarize(ideal);
    std::vector<Edge> pol_edges;
    std::vector<LoopedEdge> looped;
    std::size_t fresh = ideal.n_vars;
    for (std::size_t v : ideal.squares) {
      looped.push_back({v, v});
      pol_edges.push_back({v, fresh++});
    }
    for (const Edge& e : ideal.edges) {
      looped.push_back(e);
      pol_edges.push_back(e);
    }
    for (std::size_t a = 0; a < looped.size(); ++a)
      for (std::size_t b = a + 1; b < looped.size(); ++b) {
        const auto [p, q] = pol_edges[a];
        const auto [r, s] = pol_edges[b];
        bool apart = true;
        for (auto u : {p, q})
          for (auto v : {r, s}) apart &= u != v && !pol.graph.adjacent(u, v);
        CHECK(totally_disjoint(lg, looped[a], looped[b]) == apart);
      }
  }
}

TEST_CASE("reg3 conditions") {
  const auto ex = reg3_conditions(worked_example());
  CHECK(ex.disjoint_pair_or_long_cycle);
  CHECK(!ex.no_disjoint_triple);
  CHECK(ex.no_long_bc_cycle);
  CHECK(!reg3_nonsquarefree(worked_example()));
  CHECK(betti_nonsquarefree(worked_example()).diagram.regularity() >= 4);

  const auto p3 = make_quadratic_ideal(2, {0}, {{0, 1}});
  CHECK(reg3_nonsquarefree(p3) ==
        (betti_nonsquarefree(p3).diagram.regularity() == 3));

  CHECK_THROWS_AS(reg3_conditions(make_quadratic_ideal(4, {0}, {{0, 1}, {2, 3}})),
                  NotConnected);
  CHECK_THROWS_AS(reg3_conditions(make_quadratic_ideal(3, {0}, {{0, 1}, {1, 2}, {0, 2}})),
                  NotBipartite);
}

TEST_CASE("reg3 characterization against the engine on a small corpus") {
  for (const auto& ideal : quadratic_ideals(5, 2))
    CHECK(reg3_nonsquarefree(ideal) ==
          (betti_nonsquarefree(ideal).diagram.regularity() == 3));
}

TEST_CASE("support graph drops unused variables") {
  const auto ideal = make_quadratic_ideal(5, {4}, {{1, 4}});
  const Graph g = support_graph(ideal);
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
  CHECK(g.label(0) == "x2");
}

}  // TEST_SUITE
