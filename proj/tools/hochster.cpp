// Command-line front end: betti, reg, strand, reg3, cycle-formula, polarize,
// verify.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hochster/betti.hpp"
#include "hochster/cycle_formulas.hpp"
#include "hochster/errors.hpp"
#include "hochster/io.hpp"
#include "hochster/polarization.hpp"
#include "hochster/strands.hpp"
#include "hochster/verify.hpp"

namespace {

using namespace hochster;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitPrecondition = 4;

struct RunConfig {
  std::string input;
  std::uint32_t field = 2;
  std::size_t max_vertices = kDefaultMaxVertices;
  std::uint64_t face_cap = kDefaultFaceCap;
  unsigned threads = 0;
  std::string seed = "0x5EEDED6E";
  bool json = false;
};

template <class T>
void env_override(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return;
  try {
    value = static_cast<T>(std::stoull(raw, nullptr, 0));
  } catch (const std::exception&) {
    throw ParseError(0, std::string("environment variable ") + name +
                            " is not a number: '" + raw + "'");
  }
}

BettiOptions betti_options(const RunConfig& c) {
  BettiOptions o;
  o.field = make_prime(c.field);
  o.max_vertices = c.max_vertices;
  o.threads = c.threads;
  o.face_cap = c.face_cap;
  return o;
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(0, "seed '" + s + "' is not a 64-bit integer");
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_diagram(const BettiDiagram& d, bool as_json) {
  if (as_json) {
    print_json(diagram_json(d));
    return;
  }
  std::cout << render_table(d);
  std::cout << "regularity: "
            << (d.empty() ? std::string("none") : std::to_string(d.regularity()))
            << '\n';
}

ParsedInput load(const RunConfig& c) {
  if (c.input.empty()) throw ParseError(0, "--input is required");
  return parse_input(read_file(c.input));
}

Graph load_graph(const RunConfig& c) {
  ParsedInput in = load(c);
  if (auto* g = std::get_if<Graph>(&in)) return std::move(*g);
  return polarize(std::get<QuadraticIdeal>(in)).graph;
}

int cmd_betti(const RunConfig& c) {
  ParsedInput in = load(c);
  if (auto* g = std::get_if<Graph>(&in)) {
    print_diagram(betti_diagram(*g, betti_options(c)), c.json);
  } else {
    print_diagram(
        betti_nonsquarefree(std::get<QuadraticIdeal>(in), betti_options(c))
            .diagram,
        c.json);
  }
  return 0;
}

int cmd_reg(const RunConfig& c) {
  const BettiDiagram d = betti_diagram(load_graph(c), betti_options(c));
  if (c.json)
    print_json({{"field", d.field_char()}, {"regularity", d.regularity()}});
  else
    std::cout << "reg=" << d.regularity() << '\n';
  return 0;
}

int cmd_strand(const RunConfig& c, const std::string& theorem,
               std::size_t witness_cap) {
  const Graph g = load_graph(c);
  StrandReport r;
  if (theorem == "general")
    r = first_nonlinear_general(g, witness_cap);
  else if (theorem == "bipartite")
    r = first_nonlinear_bipartite(g, witness_cap);
  else
    r = classify_strands(g, witness_cap);
  if (c.json)
    print_json(strand_json(r));
  else
    std::cout << strand_summary(r) << '\n';
  return 0;
}

int cmd_reg3(const RunConfig& c) {
  ParsedInput in = load(c);
  bool holds = false;
  json out;
  if (auto* g = std::get_if<Graph>(&in)) {
    holds = reg3_bipartite(*g);
  } else {
    const Reg3Conditions rc = reg3_conditions(std::get<QuadraticIdeal>(in));
    holds = rc.holds();
    out["conditions"] = {
        {"disjoint_pair_or_long_complement_cycle", rc.disjoint_pair_or_long_cycle},
        {"no_disjoint_triple", rc.no_disjoint_triple},
        {"no_long_bc_cycle", rc.no_long_bc_cycle}};
  }
  out["reg3"] = holds;
  if (c.json) {
    print_json(out);
    return 0;
  }
  if (out.contains("conditions"))
    for (const auto& [name, value] : out["conditions"].items())
      std::cout << name << ": " << (value.get<bool>() ? "yes" : "no") << '\n';
  std::cout << (holds ? "reg=3" : "reg!=3") << '\n';
  return 0;
}

int cmd_cycle_formula(const RunConfig& c, std::size_t s, bool compare) {
  const Prime p = make_prime(c.field);
  const BettiDiagram closed = full_diagram_cbc(s, p);
  if (!compare) {
    print_diagram(closed, c.json);
    return 0;
  }
  BettiOptions o = betti_options(c);
  o.max_vertices = std::max(o.max_vertices, 2 * s);
  const BettiDiagram engine = betti_diagram(cycle_bipartite_complement(s), o);
  const bool same = engine == closed;
  if (c.json) {
    print_json({{"s", s},
                {"closed_form", diagram_json(closed)},
                {"engine", diagram_json(engine)},
                {"match", same}});
  } else {
    std::cout << "closed form:\n" << render_table(closed) << "engine:\n"
              << render_table(engine) << (same ? "match" : "DIFFER") << '\n';
  }
  return same ? 0 : kExitVerifyFailed;
}

int cmd_polarize(const RunConfig& c) {
  ParsedInput in = load(c);
  const auto* ideal = std::get_if<QuadraticIdeal>(&in);
  if (!ideal)
    throw PreconditionViolated(c.input + " is squarefree; nothing to polarize");
  const Polarization pol = polarize(*ideal);
  if (c.json) {
    json labels = json::array(), edges = json::array();
    for (std::size_t v = 0; v < pol.graph.order(); ++v)
      labels.push_back(pol.graph.label(v));
    for (const auto& [u, v] : pol.graph.edges())
      edges.push_back({u + 1, v + 1});
    print_json({{"n", pol.graph.order()}, {"labels", labels}, {"edges", edges}});
  } else {
    std::cout << "# vertices:";
    for (std::size_t v = 0; v < pol.graph.order(); ++v)
      std::cout << ' ' << pol.graph.label(v);
    std::cout << '\n' << format_graph(pol.graph);
  }
  return 0;
}

VerifyConfig verify_scale(const std::string& scale) {
  VerifyConfig v;
  if (scale == "quick") {
    v.max_s = 5;
    v.froberg_vertices = 5;
    v.bipartite_vertices = 6;
    v.random_bipartite = 40;
    v.ideal_vars = 4;
    v.random_ideals = 20;
  } else if (scale == "slow") {
    v.max_s = 8;
    v.random_bipartite = 2000;
    v.random_ideals = 1000;
  }
  return v;
}

int cmd_verify(const RunConfig& c, const std::string& scale,
               std::optional<std::size_t> max_s, bool fault) {
  VerifyConfig v = verify_scale(scale);
  v.threads = c.threads;
  v.seed = parse_seed(c.seed);
  v.inject_fault = fault;
  if (max_s) {
    if (*max_s < 3) throw PreconditionViolated("--s must be at least 3");
    v.max_s = *max_s;
  }
  const VerifyReport report = run_verify(
      v, [](const std::string& s) { std::cerr << "verify: " << s << '\n'; });
  if (c.json) {
    print_json(report.to_json());
  } else {
    std::cout << "seed " << report.to_json()["seed"].get<std::string>() << '\n';
    for (const auto& s : report.suites)
      std::cout << (s.failed ? "FAIL " : "PASS ") << s.name << ": "
                << s.checks - s.failed << "/" << s.checks << " checks\n";
  }
  for (const auto& s : report.suites)
    for (const auto& f : s.failures)
      std::cerr << "mismatch in " << s.name << ": " << format_mismatch(f);
  return report.passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  try {
    env_override("HOCHSTER_MAX_VERTICES", config.max_vertices);
    env_override("HOCHSTER_FACE_CAP", config.face_cap);
    env_override("HOCHSTER_THREADS", config.threads);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }

  CLI::App app{"Betti numbers of edge ideals via Hochster's formula"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("-i,--input", config.input,
                      "graph, biadjacency matrix or ideal file")
          ->required();
    sub->add_option("--field", config.field, "prime characteristic")
        ->capture_default_str();
    sub->add_option("--max-vertices", config.max_vertices,
                    "vertex cap for the subset sweep")
        ->capture_default_str();
    sub->add_option("--threads", config.threads, "worker threads, 0 = all");
    sub->add_option("--seed", config.seed, "seed of the random corpora")
        ->capture_default_str();
    sub->add_flag("--json", config.json, "JSON output");
  };

  auto* betti = app.add_subcommand("betti", "Betti diagram");
  common(betti, true);
  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  common(reg, true);
  auto* strand = app.add_subcommand("strand", "first nonlinear strand");
  common(strand, true);
  std::string theorem = "auto";
  std::size_t witness_cap = kDefaultWitnessCap;
  strand->add_option("--theorem", theorem, "auto, general or bipartite")
      ->check(CLI::IsMember({"auto", "general", "bipartite"}))
      ->capture_default_str();
  strand->add_option("--witnesses", witness_cap, "witness cycles to list")
      ->capture_default_str();
  auto* reg3 = app.add_subcommand("reg3", "regularity-3 criterion");
  common(reg3, true);
  auto* cycle = app.add_subcommand(
      "cycle-formula", "closed-form diagram of the bipartite complement of C_2s");
  common(cycle, false);
  std::size_t s = 0;
  bool compare = false;
  cycle->add_option("--s", s, "half length of the cycle")->required();
  cycle->add_flag("--compare", compare, "also run the engine and diff");
  auto* polarize_cmd = app.add_subcommand("polarize", "polarized graph");
  common(polarize_cmd, true);
  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  common(verify, false);
  std::string scale = "default";
  std::optional<std::size_t> verify_s;
  bool fault = false;
  verify->add_option("--scale", scale, "quick, default or slow")
      ->check(CLI::IsMember({"quick", "default", "slow"}))
      ->capture_default_str();
  verify->add_option("--s", verify_s, "largest cycle half length");
  verify->add_flag("--inject-fault", fault,
                   "corrupt one closed-form entry (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (config.max_vertices == 0)
      throw PreconditionViolated("--max-vertices must be positive");
    if (config.face_cap == 0)
      throw PreconditionViolated("face cap must be positive");
    if (*betti) return cmd_betti(config);
    if (*reg) return cmd_reg(config);
    if (*strand) return cmd_strand(config, theorem, witness_cap);
    if (*reg3) return cmd_reg3(config);
    if (*cycle) return cmd_cycle_formula(config, s, compare);
    if (*polarize_cmd) return cmd_polarize(config);
    if (*verify) return cmd_verify(config, scale, verify_s, fault);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (!config.input.empty()) std::cerr << " in " << config.input;
    std::cerr << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const TooManyVertices& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const FaceLimitExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return 0;
}
