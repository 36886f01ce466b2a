#include "hochster/strands.hpp"

#include "hochster/errors.hpp"

namespace hochster {

std::string to_string(RegularityClass c) {
  switch (c) {
    case RegularityClass::kLinear:
      return "linear";
    case RegularityClass::kReg3:
      return "reg3";
    case RegularityClass::kHigher:
      return "higher";
    case RegularityClass::kNonlinear:
      return "nonlinear";
  }
  return "unknown";
}

namespace {

void require_edges(const Graph& g) {
  if (g.size() == 0)
    throw EmptyIdeal("graph has no edges, so its edge ideal is zero");
}

void require_connected_bipartite(const Graph& g) {
  require_edges(g);
  if (!is_connected(g))
    throw NotConnected("hypothesis failed: graph must be connected");
  (void)require_bipartition(g);
}

StrandReport cycle_report(const Graph& host, std::size_t t, std::size_t offset,
                          RegularityClass cls, std::size_t witness_cap) {
  InducedCycles cycles = find_induced_cycles(host, t, witness_cap);
  StrandReport report;
  report.regularity_class = cls;
  report.cycle_length = t;
  report.first_nonlinear_i = t - offset;
  report.strand_degree = t;
  report.strand_count = cycles.count;
  report.witnesses = std::move(cycles.witnesses);
  return report;
}

}  // namespace

bool froberg_linear(const Graph& g) {
  require_edges(g);
  return is_chordal(complement(g));
}

StrandReport first_nonlinear_general(const Graph& g, std::size_t witness_cap) {
  if (froberg_linear(g))
    throw PreconditionViolated(
        "hypothesis failed: reg(I(G)) > 2 needs an induced cycle in the "
        "complement, but the complement is chordal");
  const Graph co = complement(g);
  const auto t = min_induced_cycle(co, 4);
  if (!t) throw std::logic_error("non-chordal graph without induced cycle");
  return cycle_report(co, *t, 3, RegularityClass::kNonlinear, witness_cap);
}

bool reg3_bipartite(const Graph& g) {
  require_connected_bipartite(g);
  return min_induced_cycle(complement(g), 4).has_value() &&
         !min_induced_cycle(bipartite_complement(g), 6).has_value();
}

StrandReport first_nonlinear_bipartite(const Graph& g,
                                       std::size_t witness_cap) {
  try {
    require_connected_bipartite(g);
  } catch (const Error& e) {
    throw PreconditionViolated(e.what());
  }
  if (froberg_linear(g))
    throw PreconditionViolated(
        "hypothesis failed: reg(I(G)) > 3, but the complement is chordal "
        "(reg = 2)");
  const Graph bc = bipartite_complement(g);
  const auto t = min_induced_cycle(bc, 6);
  if (!t)
    throw PreconditionViolated(
        "hypothesis failed: reg(I(G)) > 3, but the bipartite complement has "
        "no induced cycle of length >= 6 (reg = 3)");
  return cycle_report(bc, *t, 4, RegularityClass::kHigher, witness_cap);
}

StrandReport classify_strands(const Graph& g, std::size_t witness_cap) {
  if (froberg_linear(g)) return StrandReport{};
  const bool bipartite =
      is_connected(g) &&
      std::holds_alternative<BipartiteView>(detect_bipartition(g));
  if (!bipartite) return first_nonlinear_general(g, witness_cap);
  if (reg3_bipartite(g)) {
    StrandReport report = first_nonlinear_general(g, witness_cap);
    report.regularity_class = RegularityClass::kReg3;
    return report;
  }
  return first_nonlinear_bipartite(g, witness_cap);
}

}  // namespace hochster
