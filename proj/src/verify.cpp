#include "hochster/verify.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

#include "hochster/cycle_formulas.hpp"
#include "hochster/errors.hpp"
#include "hochster/parallel.hpp"
#include "hochster/polarization.hpp"

namespace hochster {

namespace {

constexpr std::size_t kKeptFailures = 10;

enum SuiteId : std::size_t {
  kFormulas,
  kFroberg,
  kReg3,
  kStrands,
  kPropagation,
  kPolarization,
  kErrors,
  kSuiteCount,
};

constexpr std::array<const char*, kSuiteCount> kSuiteNames = {
    "cycle_formulas", "froberg",     "reg3_bipartite",
    "first_strand",   "propagation", "polarization", "unexpected_errors"};

struct Outcome {
  std::uint64_t checks = 0;
  std::vector<Mismatch> failures;
};

using ItemResult = std::array<Outcome, kSuiteCount>;

Mismatch make_mismatch(std::string what, const Graph* g,
                       const std::vector<Vertex>& w = {}) {
  Mismatch m;
  m.what = std::move(what);
  if (g) {
    m.n = g->order();
    for (const auto& [u, v] : g->edges()) m.edges.push_back({u + 1, v + 1});
  }
  for (Vertex v : w) m.subset.push_back(v + 1);
  return m;
}

// Records one check; `describe` runs only on failure.
template <class Describe>
void check(Outcome& out, bool ok, Describe&& describe) {
  ++out.checks;
  if (!ok) out.failures.push_back(describe());
}

std::string key_string(std::size_t i, std::size_t j) {
  return "beta_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

BettiOptions serial(const BettiOptions& base) {
  BettiOptions o = base;
  o.threads = 1;
  return o;
}

// W for the entry on the top row with the least i.
std::vector<Vertex> top_row_witness(const Graph& g, const BettiDiagram& d,
                                    const BettiOptions& opts) {
  if (d.empty()) return {};
  const std::size_t reg = d.regularity();
  for (const auto& [key, count] : d.entries())
    if (key.second - key.first == reg)
      return witness_subset(g, key.first, key.second, opts).value_or(
          std::vector<Vertex>{});
  return {};
}

void audit(Outcome& out, const Graph& g, const BettiDiagram& d,
           const std::string& name) {
  check(out, check_propagation(d), [&] {
    return make_mismatch(name + ": propagation fails", &g);
  });
  check(out, check_strand_bounds(d), [&] {
    return make_mismatch(name + ": strand bounds fail", &g);
  });
}

std::string reg_string(const BettiDiagram& d) {
  return d.empty() ? "none" : std::to_string(d.regularity());
}

// ---- closed formulas against the engine

ItemResult formula_item(std::size_t s, Prime field, bool fault,
                        const BettiOptions& base) {
  ItemResult r;
  Outcome& out = r[kFormulas];
  const Graph g = cycle_bipartite_complement(s);
  BettiOptions opts = serial(base);
  opts.field = field;
  opts.max_vertices = std::max(opts.max_vertices, g.order());
  const BettiDiagram engine = betti_diagram(g, opts);
  audit(r[kPropagation], g, engine, "C_" + std::to_string(2 * s) + "^bc");
  BettiDiagram closed = full_diagram_cbc(s, field);
  if (fault) closed.add(0, 2, 1);
  const std::string tag = "s=" + std::to_string(s) +
                          " GF(" + std::to_string(field.value) + ") ";
  std::set<BettiDiagram::Key> keys;
  for (const auto& [k, v] : engine.entries()) keys.insert(k);
  for (const auto& [k, v] : closed.entries()) keys.insert(k);
  for (const auto& [i, j] : keys) {
    const auto e = engine.at(i, j), c = closed.at(i, j);
    check(out, e == c, [&] {
      return make_mismatch(
          tag + key_string(i, j) + ": engine " + std::to_string(e) +
              ", closed form " + std::to_string(c),
          &g, witness_subset(g, i, j, opts).value_or(std::vector<Vertex>{}));
    });
  }
  const std::uint64_t S = s;
  auto expect = [&](bool ok, const std::string& what) {
    check(out, ok, [&] { return make_mismatch(tag + what, &g); });
  };
  expect(!engine.empty() && engine.regularity() == 4,
         "regularity " + reg_string(engine) + ", expected 4");
  expect(engine.at(2 * s - 4, 2 * s) == 1, "top entry is not 1");
  for (const auto& [k, v] : engine.entries())
    expect(k.second <= k.first + 4, "entry beyond row 4 at " +
                                        key_string(k.first, k.second));
  expect(engine.at(0, 2) == S * (S - 2) && engine.at(s - 3, s - 1) == S * (S - 2),
         "first row ends differ from s(s-2)");
  expect(engine.at(1, 4) == S * (2 * S - 5) &&
             engine.at(2 * s - 5, 2 * s - 2) == S * (2 * S - 5),
         "second row ends differ from s(2s-5)");
  return r;
}

Outcome formula_identities(std::size_t s) {
  Outcome out;
  const std::string tag = "s=" + std::to_string(s) + " ";
  auto expect = [&](bool ok, const std::string& what) {
    check(out, ok, [&] { return make_mismatch(tag + what, nullptr); });
  };
  const BigInt S = s;
  expect(first_row(s, 2) == S * (S - 2), "first_row(s,2) != s(s-2)");
  expect(first_row(s, s - 1) == S * (S - 2), "first_row(s,s-1) != s(s-2)");
  expect(second_row(s, 4) == S * (2 * S - 5), "second_row(s,4) != s(2s-5)");
  expect(second_row(s, 2 * s - 2) == S * (2 * S - 5),
         "second_row(s,2s-2) != s(2s-5)");
  for (std::size_t j = 0; j <= 2 * s + 1; ++j) {
    expect(second_row(s, j) == second_row_factored(s, j),
           "second row forms differ at j=" + std::to_string(j));
    if (j >= s) expect(first_row(s, j) == 0, "first row nonzero at j >= s");
    if (j + 1 >= 2 * s)
      expect(second_row(s, j) == 0, "second row nonzero at j >= 2s-1");
  }
  return out;
}

// ---- strand reports

void strand_checks(Outcome& out, const Graph& g, const BettiDiagram& d,
                   bool connected_bipartite, const BettiOptions& opts) {
  if (d.empty()) return;
  const std::size_t reg = d.regularity();
  auto run = [&](const char* which, auto&& make_report) {
    try {
      const StrandReport report = make_report();
      auto problem = strand_mismatch(report, d);
      if (!problem) problem = multigraded_strand_mismatch(g, report, opts);
      check(out, !problem, [&] {
        return make_mismatch(std::string(which) + ": " + *problem, &g,
                             report.witnesses.empty()
                                 ? std::vector<Vertex>{}
                                 : report.witnesses.front());
      });
    } catch (const std::exception& e) {
      check(out, false, [&] {
        return make_mismatch(std::string(which) + " raised: " + e.what(), &g);
      });
    }
  };
  if (reg > 2)
    run("general", [&] { return first_nonlinear_general(g, 1u << 20); });
  if (connected_bipartite && reg > 3)
    run("bipartite", [&] { return first_nonlinear_bipartite(g, 1u << 20); });
  try {
    const StrandReport c = classify_strands(g, 0);
    bool ok = false;
    switch (c.regularity_class) {
      case RegularityClass::kLinear: ok = reg == 2; break;
      case RegularityClass::kReg3: ok = reg == 3; break;
      case RegularityClass::kHigher: ok = reg > 3; break;
      case RegularityClass::kNonlinear: ok = reg > 2; break;
    }
    check(out, ok, [&] {
      return make_mismatch("class " + to_string(c.regularity_class) +
                               " but regularity " + std::to_string(reg),
                           &g, top_row_witness(g, d, opts));
    });
  } catch (const std::exception& e) {
    check(out, false, [&] {
      return make_mismatch(std::string("classify raised: ") + e.what(), &g);
    });
  }
}

// ---- graph corpora

ItemResult graph_item(const Graph& g, const BettiOptions& base,
                      bool bipartite_corpus) {
  ItemResult r;
  if (g.size() == 0) return r;
  const BettiOptions opts = serial(base);
  const BettiDiagram d = betti_diagram(g, opts);
  audit(r[kPropagation], g, d, "corpus graph");
  const std::size_t reg = d.regularity();
  const bool linear = froberg_linear(g);
  check(r[kFroberg], linear == (reg == 2), [&] {
    return make_mismatch("complement chordal: " +
                             std::string(linear ? "yes" : "no") +
                             ", regularity " + std::to_string(reg),
                         &g, top_row_witness(g, d, opts));
  });
  const bool connected_bipartite =
      is_connected(g) &&
      std::holds_alternative<BipartiteView>(detect_bipartition(g));
  if (bipartite_corpus) {
    const bool reg3 = reg3_bipartite(g);
    check(r[kReg3], reg3 == (reg == 3), [&] {
      return make_mismatch("reg3_bipartite " + std::string(reg3 ? "true" : "false") +
                               ", regularity " + std::to_string(reg),
                           &g, top_row_witness(g, d, opts));
    });
  }
  strand_checks(r[kStrands], g, d, connected_bipartite, opts);
  return r;
}

// ---- quadratic ideals

std::string ideal_string(const QuadraticIdeal& ideal) {
  std::string s = "(";
  bool first = true;
  auto sep = [&] { s += first ? "" : ", "; first = false; };
  for (std::size_t v : ideal.squares) {
    sep();
    s += "x" + std::to_string(v + 1) + "^2";
  }
  for (const auto& [u, v] : ideal.edges) {
    sep();
    s += "x" + std::to_string(u + 1) + "*x" + std::to_string(v + 1);
  }
  return s + ")";
}

ItemResult ideal_item(const QuadraticIdeal& ideal, const BettiOptions& base) {
  ItemResult r;
  Outcome& out = r[kPolarization];
  const BettiOptions opts = serial(base);
  const Polarization pol = polarize(ideal);
  const Graph& gp = pol.graph;
  const std::string tag = ideal_string(ideal) + ": ";
  const NonsquarefreeBetti nsb = betti_nonsquarefree(ideal, opts, true);
  const BettiDiagram& d = nsb.diagram;
  audit(r[kPropagation], gp, d, tag + "polarization");
  const std::size_t reg = d.regularity();

  const bool reg3 = reg3_nonsquarefree(ideal);
  check(out, reg3 == (reg == 3), [&] {
    return make_mismatch(tag + "conditions say " +
                             (reg3 ? std::string("reg 3") : "not reg 3") +
                             ", regularity " + std::to_string(reg),
                         &gp, top_row_witness(gp, d, opts));
  });

  // Fold-back: distinct multidegrees per i, and totals match the diagram.
  std::set<std::pair<std::size_t, std::vector<unsigned>>> seen;
  BettiDiagram folded(gp.order(), d.field_char());
  bool injective = true;
  for (const auto& e : nsb.multigraded) {
    injective &= seen.insert({e.i, e.multidegree}).second;
    std::size_t size = 0;
    for (unsigned m : e.multidegree) size += m;
    folded.add(e.i, size, e.count);
  }
  check(out, injective,
        [&] { return make_mismatch(tag + "fold-back not injective", &gp); });
  check(out, folded == d, [&] {
    return make_mismatch(tag + "folded entries do not sum to the diagram", &gp);
  });

  const LoopedGraph looped = looped_graph(ideal);
  const DisjointTriples triples = totally_disjoint_triples(looped, 1u << 20);
  if (triples.count > 0) {
    check(out, d.at(2, 6) == triples.count, [&] {
      return make_mismatch(tag + "beta_{2,6} = " + std::to_string(d.at(2, 6)) +
                               ", disjoint triples " +
                               std::to_string(triples.count),
                           &gp, witness_subset(gp, 2, 6, opts).value_or(
                                    std::vector<Vertex>{}));
    });
    for (const auto& [k, v] : d.entries()) {
      const bool bad = (k.first <= 1 && k.second > k.first + 3) ||
                       (k.first == 2 && k.second > 6);
      check(out, !bad, [&] {
        return make_mismatch(tag + "unexpected " +
                                 key_string(k.first, k.second),
                             &gp, witness_subset(gp, k.first, k.second, opts)
                                      .value_or(std::vector<Vertex>{}));
      });
    }
    // Degree-6 multidegrees at i = 2 are the triples, a loop at u giving 2e_u.
    std::set<std::vector<unsigned>> expected;
    for (const auto& t : triples.witnesses) {
      std::vector<unsigned> m(ideal.n_vars, 0);
      for (const auto& [u, v] : t) {
        ++m[u];
        ++m[v];
      }
      expected.insert(m);
    }
    std::set<std::vector<unsigned>> found;
    bool ones = true;
    for (const auto& e : nsb.multigraded) {
      std::size_t size = 0;
      for (unsigned m : e.multidegree) size += m;
      if (e.i != 2 || size != 6) continue;
      found.insert(e.multidegree);
      ones &= e.count == 1;
    }
    check(out, ones && found == expected, [&] {
      return make_mismatch(tag + "multidegrees at beta_{2,6} are not the triples",
                           &gp);
    });
  } else if (reg > 3) {
    try {
      const StrandReport report = first_nonlinear_bipartite(gp, 1u << 20);
      auto problem = strand_mismatch(report, d);
      if (!problem) problem = multigraded_strand_mismatch(gp, report, opts);
      check(out, !problem, [&] {
        return make_mismatch(tag + "polarized strand: " + *problem, &gp);
      });
      const Graph sqf = support_graph(ideal);
      const Graph bc = bipartite_complement(sqf);
      const auto t = min_induced_cycle(bc, 6);
      const bool same = t && *t == *report.cycle_length &&
                        count_induced_cycles(bc, *t) == *report.strand_count;
      check(out, same, [&] {
        return make_mismatch(tag + "long cycles of the two bipartite "
                                   "complements differ",
                             &gp);
      });
    } catch (const std::exception& e) {
      check(out, false, [&] {
        return make_mismatch(tag + "strand report raised: " + e.what(), &gp);
      });
    }
  }
  return r;
}

// Runs `item(k)` for k < count over the pool; results merge in index order.
template <class Item>
void sweep(std::array<SuiteResult, kSuiteCount>& suites, std::size_t count,
           unsigned threads, Item&& item) {
  std::vector<ItemResult> results(count);
  parallel_chunks(count, 16, threads,
                  [&](std::uint64_t begin, std::uint64_t end, unsigned) {
                    for (std::uint64_t k = begin; k < end; ++k) {
                      try {
                        results[k] = item(k);
                      } catch (const std::exception& e) {
                        results[k] = {};
                        results[k][kErrors].checks = 1;
                        results[k][kErrors].failures.push_back(
                            make_mismatch(std::string("item ") +
                                              std::to_string(k) +
                                              " raised: " + e.what(),
                                          nullptr));
                      }
                    }
                  });
  for (auto& r : results)
    for (std::size_t s = 0; s < kSuiteCount; ++s) {
      suites[s].checks += r[s].checks;
      suites[s].failed += r[s].failures.size();
      for (auto& f : r[s].failures)
        if (suites[s].failures.size() < kKeptFailures)
          suites[s].failures.push_back(std::move(f));
    }
}

}  // namespace

std::optional<std::vector<Vertex>> witness_subset(const Graph& g, std::size_t i,
                                                  std::size_t j,
                                                  const BettiOptions& options) {
  for (const auto& e : multigraded_entries(g, options, j, j))
    if (e.i == i) return subset_members(e.support);
  return std::nullopt;
}

std::optional<std::string> strand_mismatch(const StrandReport& report,
                                           const BettiDiagram& d) {
  if (d.empty()) return "empty diagram";
  const std::size_t reg = d.regularity();
  if (report.regularity_class == RegularityClass::kLinear)
    return reg == 2 ? std::nullopt
                    : std::optional<std::string>("report says linear, regularity " +
                                                 std::to_string(reg));
  const std::size_t offset =
      report.regularity_class == RegularityClass::kHigher ? 4 : 3;
  const std::size_t rows = offset - 1;  // rows below the strand: 2 or 3
  if (reg <= rows)
    return "regularity " + std::to_string(reg) + " but a strand above row " +
           std::to_string(rows) + " reported";
  const std::size_t t = *report.cycle_length, i0 = *report.first_nonlinear_i;
  if (i0 + offset != t) return "reported i and t disagree";
  for (const auto& [k, v] : d.entries()) {
    const auto [i, j] = k;
    if (i < i0 && j > i + rows)
      return "nonzero " + key_string(i, j) + " before column " +
             std::to_string(i0);
    if (i == i0 && j > t)
      return "nonzero " + key_string(i, j) + " above degree " +
             std::to_string(t);
  }
  if (d.at(i0, t) != *report.strand_count)
    return key_string(i0, t) + " = " + std::to_string(d.at(i0, t)) +
           ", induced " + std::to_string(t) + "-cycles " +
           std::to_string(*report.strand_count);
  return std::nullopt;
}

std::optional<std::string> multigraded_strand_mismatch(
    const Graph& g, const StrandReport& report, const BettiOptions& options) {
  if (report.regularity_class == RegularityClass::kLinear) return std::nullopt;
  if (report.witnesses.size() != *report.strand_count)
    return "witness list truncated";
  const std::size_t t = *report.cycle_length, i0 = *report.first_nonlinear_i;
  std::set<std::vector<Vertex>> expected;
  for (auto w : report.witnesses) {
    std::sort(w.begin(), w.end());
    expected.insert(w);
  }
  std::set<std::vector<Vertex>> found;
  for (const auto& e : multigraded_entries(g, options, t, t)) {
    if (e.i != i0) continue;
    if (e.count != 1)
      return "beta_{" + std::to_string(i0) + ",W} = " +
             std::to_string(e.count) + " on a degree-" + std::to_string(t) +
             " subset";
    found.insert(subset_members(e.support));
  }
  if (found != expected)
    return "degree-" + std::to_string(t) +
           " multidegrees are not the induced cycles";
  return std::nullopt;
}

bool VerifyReport::passed() const {
  for (const auto& s : suites)
    if (s.failed != 0) return false;
  return true;
}

nlohmann::json VerifyReport::to_json() const {
  std::ostringstream hex;
  hex << "0x" << std::uppercase << std::hex << seed;
  nlohmann::json out = {{"seed", hex.str()}, {"passed", passed()}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : suites) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : s.failures)
      failures.push_back({{"what", f.what},
                          {"n", f.n},
                          {"edges", f.edges},
                          {"subset", f.subset}});
    list.push_back({{"name", s.name},
                    {"checks", s.checks},
                    {"failed", s.failed},
                    {"failures", failures}});
  }
  out["suites"] = list;
  return out;
}

std::string format_mismatch(const Mismatch& m) {
  std::ostringstream out;
  out << m.what << '\n';
  if (m.n != 0) {
    out << "graph:\n" << m.n << '\n';
    for (const auto& [u, v] : m.edges) out << u << ' ' << v << '\n';
  }
  if (!m.subset.empty()) {
    out << "W =";
    for (auto v : m.subset) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

VerifyReport run_verify(const VerifyConfig& config, const ProgressFn& progress) {
  auto note = [&](const std::string& s) {
    if (progress) progress(s);
  };
  std::array<SuiteResult, kSuiteCount> suites;
  for (std::size_t s = 0; s < kSuiteCount; ++s) suites[s].name = kSuiteNames[s];
  BettiOptions base;
  base.max_vertices = 64;

  note("closed formulas");
  std::vector<std::pair<std::size_t, Prime>> cases;
  for (std::size_t s = config.min_s; s <= config.max_s; ++s)
    for (Prime p : config.fields) cases.push_back({s, p});
  sweep(suites, cases.size(), config.threads, [&](std::size_t k) {
    const auto [s, p] = cases[k];
    ItemResult r = formula_item(
        s, p, config.inject_fault && k == 0, base);
    if (p.value == config.fields.front().value) {
      Outcome ids = formula_identities(s);
      r[kFormulas].checks += ids.checks;
      for (auto& f : ids.failures) r[kFormulas].failures.push_back(f);
    }
    return r;
  });

  note("all graphs on " + std::to_string(config.froberg_vertices) +
       " vertices");
  {
    BettiOptions straight = base;
    straight.mode = SweepMode::kStraight;
    const std::size_t n = config.froberg_vertices;
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    sweep(suites, total, config.threads, [&](std::size_t code) {
      return graph_item(graph_from_code(n, code), straight, false);
    });
  }

  if (config.froberg_vertices >= 2 && config.froberg_vertices <= 6) {
    note("graphs on " + std::to_string(config.froberg_vertices + 1) +
         " vertices up to isomorphism");
    const auto graphs = one_vertex_extensions(config.froberg_vertices);
    sweep(suites, graphs.size(), config.threads, [&](std::size_t k) {
      return graph_item(graphs[k], base, false);
    });
  }

  note("connected bipartite graphs on <= " +
       std::to_string(config.bipartite_vertices) + " vertices");
  {
    const auto graphs = connected_bipartite_graphs(config.bipartite_vertices);
    sweep(suites, graphs.size(), config.threads, [&](std::size_t k) {
      return graph_item(graphs[k], base, true);
    });
  }

  note("random connected bipartite graphs");
  {
    const auto graphs = random_connected_bipartite(
        config.random_bipartite, config.random_min_vertices,
        config.random_max_vertices, config.seed);
    sweep(suites, graphs.size(), config.threads, [&](std::size_t k) {
      return graph_item(graphs[k], base, true);
    });
  }

  note("quadratic ideals");
  {
    auto ideals = quadratic_ideals(config.ideal_vars, config.ideal_squares);
    for (auto& i : random_quadratic_ideals(
             config.random_ideals, config.random_ideal_min_vars,
             config.random_ideal_max_vars, config.seed))
      ideals.push_back(std::move(i));
    sweep(suites, ideals.size(), config.threads,
          [&](std::size_t k) { return ideal_item(ideals[k], base); });
  }

  VerifyReport report;
  report.seed = config.seed;
  report.suites.assign(suites.begin(), suites.end());
  return report;
}

}  // namespace hochster
