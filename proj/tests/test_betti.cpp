#include <doctest.h>

#include <random>

#include "hochster/betti.hpp"
#include "hochster/corpus.hpp"
#include "hochster/cycle_formulas.hpp"
#include "hochster/errors.hpp"
#include "oracles.hpp"

using namespace hochster;

namespace {

oracle::Diagram as_map(const BettiDiagram& d) {
  oracle::Diagram m;
  for (const auto& [k, v] : d.entries()) m[k] = v;
  return m;
}

BettiOptions with(Prime p, SweepMode mode, unsigned threads = 1) {
  BettiOptions o;
  o.field = p;
  o.mode = mode;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_SUITE("betti") {

TEST_CASE("examples") {
  const BettiDiagram edge = betti_diagram(matching_graph(1));
  CHECK(as_map(edge) == oracle::Diagram{{{0, 2}, 1}});
  CHECK(edge.regularity() == 2);
  CHECK(strand_extrema(edge) == std::vector<StrandExtrema>{{0, 2, 2}});

  const BettiDiagram three = betti_diagram(matching_graph(3));
  CHECK(as_map(three) ==
        oracle::Diagram{{{0, 2}, 3}, {{1, 4}, 3}, {{2, 6}, 1}});
  CHECK(three.regularity() == 4);
  CHECK(strand_extrema(three) ==
        std::vector<StrandExtrema>{{0, 2, 2}, {1, 4, 4}, {2, 6, 6}});

  const BettiDiagram c8 = betti_diagram(cycle_bipartite_complement(4));
  CHECK(c8.at(0, 2) == 8);
  CHECK(c8.at(1, 3) == 8);
  for (std::size_t i = 2; i <= 4; ++i) CHECK(c8.at(i, i + 2) == 0);
  CHECK(c8.at(1, 4) == 12);
  CHECK(c8.at(3, 6) == 12);
  CHECK(c8.at(4, 8) == 1);
  CHECK(as_map(c8) == oracle::betti(cycle_bipartite_complement(4), 2));

  CHECK(betti_diagram(cycle_graph(6)).regularity() == 3);
  CHECK(as_map(betti_diagram(matching_graph(2))) ==
        oracle::Diagram{{{0, 2}, 2}, {{1, 4}, 1}});
}

TEST_CASE("multigraded examples") {
  const Graph edge = matching_graph(1);
  CHECK(multigraded_betti(edge, edge.all_vertices(), Prime{2}) ==
        std::vector<std::pair<std::size_t, std::uint64_t>>{{0, 1}});
  for (std::size_t s = 3; s <= 5; ++s) {
    const Graph g = cycle_bipartite_complement(s);
    CHECK(multigraded_betti(g, g.all_vertices(), Prime{2}) ==
          std::vector<std::pair<std::size_t, std::uint64_t>>{{2 * s - 4, 1}});
  }
  const Graph m3 = matching_graph(3);
  CHECK(multigraded_betti(m3, m3.all_vertices(), Prime{3}) ==
        std::vector<std::pair<std::size_t, std::uint64_t>>{{2, 1}});
}

TEST_CASE("engine matches the naive Hochster oracle") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 120; ++k) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g =
        graph_from_code(n, rng() & ((std::uint64_t{1} << pair_count(n)) - 1));
    if (g.size() == 0) continue;
    for (std::uint32_t p : {2u, 3u}) {
      const auto truth = oracle::betti(g, p);
      CHECK(as_map(betti_diagram(g, with(Prime{p}, SweepMode::kStraight))) == truth);
      CHECK(as_map(betti_diagram(g, with(Prime{p}, SweepMode::kReductions))) == truth);
    }
  }
  for (const Graph& g : random_connected_bipartite(25, 5, 9, 77))
    CHECK(as_map(betti_diagram(g)) == oracle::betti(g, 2));
}

TEST_CASE("multigraded entries sum to the diagram") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    const Graph g = graph_from_code(7, rng() & ((std::uint64_t{1} << 21) - 1));
    if (g.size() == 0) continue;
    BettiDiagram sum(g.order(), 2);
    for (const auto& e : multigraded_entries(g, with(Prime{2}, SweepMode::kStraight)))
      sum.add(e.i, e.support.count(), e.count);
    CHECK(sum == betti_diagram(g));
  }
}

TEST_CASE("generic invariants") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + rng() % 8;
    const Graph g =
        graph_from_code(n, rng() & ((std::uint64_t{1} << pair_count(n)) - 1));
    if (g.size() == 0) {
      CHECK_THROWS_AS(betti_diagram(g).regularity(), EmptyIdeal);
      continue;
    }
    const BettiDiagram d = betti_diagram(g);
    CHECK(d.at(0, 2) == g.size());
    for (const auto& [key, v] : d.entries()) {
      CHECK(key.second >= key.first + 2);
      if (key.first == 0) CHECK(key.second == 2);
    }
    CHECK(induced_matching_number(g) + 1 <= d.regularity());
    CHECK(check_propagation(d));
    CHECK(check_strand_bounds(d));
  }
}

TEST_CASE("fields agree on the cycle and matching families") {
  for (std::size_t s = 3; s <= 5; ++s) {
    const Graph g = cycle_bipartite_complement(s);
    CHECK(betti_diagram(g, with(Prime{2}, SweepMode::kReductions)) ==
          betti_diagram(g, with(Prime{3}, SweepMode::kReductions)));
  }
  for (std::size_t m = 1; m <= 5; ++m)
    CHECK(betti_diagram(matching_graph(m), with(Prime{2}, SweepMode::kStraight)) ==
          betti_diagram(matching_graph(m), with(Prime{3}, SweepMode::kStraight)));
}

TEST_CASE("thread count does not change the diagram") {
  const Graph g = cycle_bipartite_complement(6);
  const BettiDiagram one = betti_diagram(g, with(Prime{2}, SweepMode::kReductions, 1));
  for (unsigned t : {2u, 3u, 8u})
    CHECK(betti_diagram(g, with(Prime{2}, SweepMode::kReductions, t)) == one);
  const auto e1 = multigraded_entries(g, with(Prime{2}, SweepMode::kReductions, 1));
  const auto e4 = multigraded_entries(g, with(Prime{2}, SweepMode::kReductions, 4));
  REQUIRE(e1.size() == e4.size());
  for (std::size_t k = 0; k < e1.size(); ++k) {
    CHECK(e1[k].support == e4[k].support);
    CHECK(e1[k].count == e4[k].count);
  }
}

TEST_CASE("disjoint union computed directly") {
  const Graph g = disjoint_union(cycle_graph(5), matching_graph(1));
  CHECK(as_map(betti_diagram(g)) == oracle::betti(g, 2));
}

TEST_CASE("caps") {
  BettiOptions o;
  o.max_vertices = 5;
  CHECK_THROWS_AS(betti_diagram(cycle_graph(6), o), TooManyVertices);
  o.max_vertices = 22;
  o.face_cap = 4;
  o.mode = SweepMode::kStraight;  // reductions never list faces
  try {
    (void)betti_diagram(matching_graph(3), o);
    FAIL("face cap not enforced");
  } catch (const FaceLimitExceeded& e) {
    CHECK(!e.subset().empty());
  }
}

TEST_CASE("propagation and strand bound checks on hand-built diagrams") {
  BettiDiagram bad;
  bad.set(0, 2, 1);
  bad.set(1, 5, 1);
  CHECK(!check_propagation(bad));
  CHECK(check_propagation(BettiDiagram{}));
  BettiDiagram jump;
  jump.set(0, 2, 1);
  jump.set(1, 3, 1);
  jump.set(2, 8, 1);
  CHECK(!check_strand_bounds(jump));
  BettiDiagram low;
  low.set(0, 2, 1);
  low.set(1, 3, 1);
  low.set(2, 3, 1);
  CHECK(!check_strand_bounds(low));
  CHECK_THROWS_AS(BettiDiagram{}.regularity(), EmptyIdeal);
}

}  // TEST_SUITE
