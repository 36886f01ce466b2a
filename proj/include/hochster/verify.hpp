#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochster/betti.hpp"
#include "hochster/corpus.hpp"
#include "hochster/strands.hpp"

namespace hochster {

struct VerifyConfig {
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t min_s = 3;
  std::size_t max_s = 6;
  std::size_t froberg_vertices = 6;
  std::size_t bipartite_vertices = 8;
  std::size_t random_bipartite = 500;
  std::size_t random_min_vertices = 9;
  std::size_t random_max_vertices = 12;
  std::size_t ideal_vars = 6;
  std::size_t ideal_squares = 2;
  std::size_t random_ideals = 200;
  std::size_t random_ideal_min_vars = 7;
  std::size_t random_ideal_max_vars = 9;
  std::vector<Prime> fields{Prime{2}, Prime{3}};
  /// Negative control: perturbs one closed-form entry so the formula suite
  /// must fail.
  bool inject_fault = false;
};

/// A failed check with what is needed to rerun it.
struct Mismatch {
  std::string what;
  std::size_t n = 0;                            // graph order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based
  std::vector<std::size_t> subset;  // W, 1-based; empty when none applies
};

/// Reproducer as text: the graph in the edge-list input format, then W.
std::string format_mismatch(const Mismatch& m);

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::vector<Mismatch> failures;  // first few
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
  nlohmann::json to_json() const;
};

using ProgressFn = std::function<void(const std::string&)>;

VerifyReport run_verify(const VerifyConfig& config,
                        const ProgressFn& progress = {});

/// Compares a strand report with a diagram of the same graph: the row
/// vanishing before the first nonlinear column, the count at (t - o, t) and
/// nothing above degree t in that column (o = 4 for the bipartite report,
/// 3 otherwise). Returns a description of the first disagreement.
std::optional<std::string> strand_mismatch(const StrandReport& report,
                                           const BettiDiagram& d);

/// The multigraded part: nonzero β_{t-o,W} with |W| = t are exactly the
/// witness cycles, each with value 1. Needs the full witness list.
std::optional<std::string> multigraded_strand_mismatch(
    const Graph& g, const StrandReport& report, const BettiOptions& options);

/// Least W (by bitmask) of size j with β_{i,W} != 0, 0-based.
std::optional<std::vector<Vertex>> witness_subset(const Graph& g, std::size_t i,
                                                  std::size_t j,
                                                  const BettiOptions& options);

}  // namespace hochster
