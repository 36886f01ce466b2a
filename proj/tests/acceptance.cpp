// One line per acceptance criterion, nonzero exit if any fails.
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hochster/betti.hpp"
#include "hochster/corpus.hpp"
#include "hochster/cycle_formulas.hpp"
#include "hochster/homology.hpp"
#include "hochster/io.hpp"
#include "hochster/polarization.hpp"
#include "hochster/strands.hpp"
#include "hochster/verify.hpp"
#include "oracles.hpp"

using namespace hochster;

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::string first;
  void expect(bool ok, const std::function<std::string()>& why) {
    ++checks;
    if (ok) return;
    if (failed++ == 0) first = why();
  }
  std::string detail() const {
    std::ostringstream out;
    out << checks << " checks";
    if (failed) out << ", " << failed << " failed; first: " << first;
    return out.str();
  }
};

BettiOptions opts(Prime p = Prime{2}, SweepMode mode = SweepMode::kReductions) {
  BettiOptions o;
  o.field = p;
  o.mode = mode;
  o.threads = 1;
  o.max_vertices = 64;
  return o;
}

std::string key(std::size_t i, std::size_t j) {
  return "beta_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::string graph_text(const Graph& g) {
  std::string s = format_graph(g);
  for (char& c : s)
    if (c == '\n') c = ';';
  return s;
}

// Criterion 6 shares the corpora of 4 and 5.
Tally strands_tally;

void check_strands(const Graph& g, const BettiDiagram& d, bool connected_bipartite) {
  const std::size_t reg = d.regularity();
  auto run = [&](const char* which, const StrandReport& r) {
    const auto problem = strand_mismatch(r, d);
    strands_tally.expect(!problem, [&] {
      return std::string(which) + " on " + graph_text(g) + ": " + *problem;
    });
  };
  try {
    if (reg > 2) run("general", first_nonlinear_general(g, 1u << 20));
    if (connected_bipartite && reg > 3)
      run("bipartite", first_nonlinear_bipartite(g, 1u << 20));
  } catch (const std::exception& e) {
    strands_tally.expect(false, [&] { return graph_text(g) + ": " + e.what(); });
  }
}

// ---- 1 to 3: the C_2s^bc family

Tally criterion1() {
  Tally t;
  for (std::size_t s = 3; s <= 5; ++s)
    for (std::uint32_t p : {2u, 3u}) {
      const BettiDiagram engine = betti_diagram(cycle_bipartite_complement(s), opts(Prime{p}));
      const BettiDiagram closed = full_diagram_cbc(s, Prime{p});
      t.expect(engine == closed, [&] {
        return "s=" + std::to_string(s) + " GF(" + std::to_string(p) + ") differs";
      });
    }
  // the engine itself against the naive chain complexes
  for (std::size_t s = 3; s <= 4; ++s) {
    const BettiDiagram formula = full_diagram_cbc(s);
    oracle::Diagram closed;
    for (const auto& [k, v] : formula.entries()) closed[k] = v;
    t.expect(closed == oracle::betti(cycle_bipartite_complement(s), 3),
             [&] { return "naive oracle differs at s=" + std::to_string(s); });
  }
  return t;
}

Tally criterion2() {
  Tally t;
  for (std::size_t s = 3; s <= 5; ++s) {
    const BettiDiagram d = betti_diagram(cycle_bipartite_complement(s), opts());
    const std::string tag = "s=" + std::to_string(s) + ": ";
    t.expect(d.regularity() == 4, [&] { return tag + "regularity " + std::to_string(d.regularity()); });
    t.expect(d.at(2 * s - 4, 2 * s) == 1, [&] { return tag + key(2 * s - 4, 2 * s) + " != 1"; });
    for (const auto& [k, v] : d.entries())
      t.expect(k.second - k.first <= 4, [&] { return tag + "entry at " + key(k.first, k.second); });
  }
  return t;
}

Tally criterion3() {
  Tally t;
  for (std::size_t s = 3; s <= 6; ++s) {
    std::vector<BettiDiagram> diagrams{full_diagram_cbc(s)};
    if (s <= 5) diagrams.push_back(betti_diagram(cycle_bipartite_complement(s), opts()));
    const std::uint64_t first = s * (s - 2), second = s * (2 * s - 5);
    for (const BettiDiagram& d : diagrams) {
      const std::string tag = "s=" + std::to_string(s) + ": ";
      t.expect(d.at(0, 2) == first, [&] { return tag + key(0, 2); });
      t.expect(d.at(s - 3, s - 1) == first, [&] { return tag + key(s - 3, s - 1); });
      t.expect(d.at(1, 4) == second, [&] { return tag + key(1, 4); });
      t.expect(d.at(2 * s - 5, 2 * s - 2) == second,
               [&] { return tag + key(2 * s - 5, 2 * s - 2); });
    }
  }
  return t;
}

// ---- 4, 5: characterizations

Tally criterion4() {
  Tally t;
  const std::size_t n = 6;
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << pair_count(n)); ++code) {
    const Graph g = graph_from_code(n, code);
    const BettiDiagram d = betti_diagram(g, opts(Prime{2}, SweepMode::kStraight));
    const bool linear = froberg_linear(g);
    t.expect(linear == (d.regularity() == 2), [&] {
      return graph_text(g) + " froberg " + std::to_string(linear) + ", regularity " +
             std::to_string(d.regularity());
    });
    check_strands(g, d, false);
  }
  // seven vertices up to isomorphism for the general strand report
  for (const Graph& g : one_vertex_extensions(6)) {
    if (g.size() == 0) continue;
    check_strands(g, betti_diagram(g, opts()), false);
  }
  return t;
}

Tally criterion5() {
  Tally t;
  auto run = [&](const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) {
      const BettiDiagram d = betti_diagram(g, opts());
      const bool r3 = reg3_bipartite(g);
      t.expect(r3 == (d.regularity() == 3), [&] {
        return graph_text(g) + " reg3_bipartite " + std::to_string(r3) +
               ", regularity " + std::to_string(d.regularity());
      });
      check_strands(g, d, true);
    }
  };
  run(connected_bipartite_graphs(8));
  const auto random = random_connected_bipartite(500, 9, 12, kDefaultSeed);
  t.expect(random.size() == 500, [] { return "random corpus short"; });
  run(random);
  return t;
}

// ---- 8: counting

Tally criterion8() {
  Tally t;
  for (std::size_t s = 3; s <= 6; ++s) {
    const Graph cycle = even_cycle(s);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> direct;
    for (std::uint64_t w = 1; w + 1 < (std::uint64_t{1} << (2 * s)); ++w) {
      std::size_t isolated = 0;
      for (int v : oracle::members(w)) {
        bool lonely = true;
        for (int u : oracle::members(w)) lonely &= !cycle.adjacent(u, v);
        isolated += lonely;
      }
      ++direct[{static_cast<std::size_t>(std::popcount(w)),
                oracle::components(cycle, w) - isolated, isolated}];
    }
    for (std::size_t j = 2; j < 2 * s; ++j)
      for (std::size_t m = 2; 2 * m <= j; ++m)
        for (std::size_t a = 0; a + 2 * m <= j; ++a) {
          const auto it = direct.find({j, m, a});
          const std::uint64_t want = it == direct.end() ? 0 : it->second;
          t.expect(count_subsets_by_components(s, j, m, a) == want, [&] {
            return "s=" + std::to_string(s) + " j=" + std::to_string(j) + " m=" +
                   std::to_string(m) + " a=" + std::to_string(a);
          });
        }
  }
  for (std::size_t s = 3; s <= 7; ++s)
    for (std::uint64_t wx = 1; wx + 1 < (std::uint64_t{1} << s); ++wx) {
      std::vector<std::size_t> xs;
      for (int x : oracle::members(wx)) xs.push_back(static_cast<std::size_t>(x));
      t.expect(neighborhood_identity_check(s, xs), [&] {
        return "neighbourhood identity s=" + std::to_string(s) + " mask " + std::to_string(wx);
      });
    }
  return t;
}

// ---- 9: the worked ideal

Tally criterion9() {
  Tally t;
  const QuadraticIdeal ideal = make_quadratic_ideal(
      7, {0}, {{0, 4}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 5}});
  const BettiDiagram d = betti_nonsquarefree(ideal, opts()).diagram;
  t.expect(d.at(2, 6) == 1, [&] { return key(2, 6) + " = " + std::to_string(d.at(2, 6)); });
  oracle::Diagram naive = oracle::betti(polarize(ideal).graph, 2);
  t.expect(naive[{2, 6}] == 1, [] { return "naive oracle disagrees on beta_{2,6}"; });
  const auto triples = totally_disjoint_triples(looped_graph(ideal));
  t.expect(triples.count == 1, [&] { return "triples " + std::to_string(triples.count); });
  const Graph bc = bipartite_complement(support_graph(ideal));
  t.expect(count_induced_cycles(bc, 6) == 0, [] { return "G^bc has an induced 6-cycle"; });
  t.expect(oracle::induced_cycles(bc, 6) == 0, [] { return "oracle finds an induced 6-cycle"; });
  return t;
}

// ---- 10: homology fixtures

Tally criterion10() {
  Tally t;
  auto full = [](const Graph& g, Prime p) {
    return reduced_homology({g, g.all_vertices()}, p);
  };
  auto euler = [&](const Graph& g, const HomologyVector& h) {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < h.dims.size(); ++i)
      chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(h.dims[i]);
    t.expect(chi == reduced_euler_characteristic({g, g.all_vertices()}),
             [&] { return "euler characteristic on " + graph_text(g); });
  };
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::uint32_t p : {2u, 3u}) {
      const Graph sigma = matching_graph(m);
      std::vector<std::uint64_t> want(m, 0);
      want[m - 1] = 1;
      const HomologyVector h = full(sigma, Prime{p});
      t.expect(h.dims == want, [&] { return "Sigma_" + std::to_string(m); });
      euler(sigma, h);

      std::vector<Vertex> xs, ys;
      for (std::size_t k = 0; k < m; ++k) {
        xs.push_back(2 * k);
        ys.push_back(2 * k + 1);
      }
      const Graph theta = bipartite_complement(sigma, make_bipartite_view(sigma, xs, ys), true);
      const HomologyVector ht = full(theta, Prime{p});
      std::vector<std::uint64_t> want_t{0, m - 1};
      if (m == 1) want_t.clear();
      t.expect(ht.dims == want_t, [&] { return "Theta_" + std::to_string(m); });
      euler(theta, ht);
    }
  for (std::size_t s = 3; s <= 5; ++s) {
    const Graph g = cycle_bipartite_complement(s);
    const Graph cycle = even_cycle(s);
    const std::uint64_t xmask = (std::uint64_t{1} << s) - 1;
    const auto adj = g.adjacency_masks();
    for (std::uint64_t w = 1; w + 1 < (std::uint64_t{1} << (2 * s)); ++w) {
      const HomologyVector h = reduced_homology_masks(adj, w, Prime{2});
      std::vector<std::uint64_t> want;
      if ((w & xmask) != 0 && (w & ~xmask) != 0) {
        std::size_t isolated = 0;
        for (int v : oracle::members(w)) {
          bool lonely = true;
          for (int u : oracle::members(w)) lonely &= !cycle.adjacent(u, v);
          isolated += lonely;
        }
        const std::size_t k = oracle::components(cycle, w) - isolated;
        if (k == 0) want = {1};
        else if (k > 1) want = {0, k - 1};
      }
      t.expect(h.dims == want, [&] {
        return "classification s=" + std::to_string(s) + " W mask " + std::to_string(w);
      });
    }
    const HomologyVector top = full(g, Prime{3});
    t.expect(top.dims == std::vector<std::uint64_t>{0, 0, 1},
             [&] { return "whole C_" + std::to_string(2 * s) + "^bc"; });
    euler(g, top);
  }
  return t;
}

// ---- 11: determinism

Tally criterion11() {
  Tally t;
  VerifyConfig c;
  c.threads = 1;
  const std::string one = run_verify(c).to_json().dump();
  c.threads = 4;
  const std::string four = run_verify(c).to_json().dump();
  t.expect(one == four, [] { return "reports differ between 1 and 4 threads"; });
  return t;
}

}  // namespace

int main() {
  std::atomic<std::uint64_t> audited{0}, audit_failed{0};
  std::string first_audit;
  set_diagram_observer([&](const Graph& g, const BettiDiagram& d) {
    ++audited;
    if (check_propagation(d) && check_strand_bounds(d)) return;
    if (audit_failed++ == 0) first_audit = graph_text(g);
  });

  struct Criterion {
    int number;
    const char* title;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closed formulas equal the engine for s=3..5 over GF(2), GF(3)", criterion1},
      {2, "C_2s^bc has regularity 4 with a single top entry, s=3..5", criterion2},
      {3, "row identities s(s-2) and s(2s-5), s=3..6", criterion3},
      {4, "froberg on all graphs with 6 labeled vertices", criterion4},
      {5, "reg3 characterization, bipartite <= 8 and 500 random", criterion5},
      {6, "first nonlinear strand reports match the diagrams of 4 and 5", [] { return strands_tally; }},
      {7, "propagation and strand bounds on every diagram", nullptr},
      {8, "subset counts and neighbourhood identity", criterion8},
      {9, "worked nonsquarefree example", criterion9},
      {10, "homology fixtures and component classification", criterion10},
      {11, "verify report identical at 1 and 4 threads", criterion11},
  };

  std::vector<std::string> lines(criteria.size());
  bool all = true;
  auto emit = [&](std::size_t k, const Tally& t, double seconds) {
    std::ostringstream out;
    out << (t.failed == 0 && t.checks > 0 ? "PASS" : "FAIL") << " criterion "
        << criteria[k].number << ": " << criteria[k].title << " (" << t.detail()
        << ", " << static_cast<long>(seconds * 1000) << " ms)";
    lines[k] = out.str();
    all &= t.failed == 0 && t.checks > 0;
  };
  std::size_t seven = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!criteria[k].run) {
      seven = k;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[k].run();
    } catch (const std::exception& e) {
      t.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    emit(k, t, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  set_diagram_observer({});
  Tally audit;
  audit.checks = audited;
  audit.failed = audit_failed;
  audit.first = first_audit;
  emit(seven, audit, 0);

  for (const auto& line : lines) std::cout << line << '\n';
  return all ? 0 : 1;
}
