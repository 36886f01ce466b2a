#include "hochster/cycle_formulas.hpp"

#include <algorithm>
#include <string>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

using Int = std::int64_t;

BigInt exact_divide(const BigInt& numerator, Int divisor, const char* where) {
  if (numerator % divisor != 0)
    throw FormulaIntegrityError(std::string(where) + ": " +
                                numerator.str() + " not divisible by " +
                                std::to_string(divisor));
  return numerator / divisor;
}

void require_s(std::size_t s) {
  if (s < 3)
    throw PreconditionViolated("even cycle formulas need s >= 3, got s = " +
                               std::to_string(s));
}

}  // namespace

BigInt binomial(Int n, Int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (Int r = 1; r <= k; ++r) result = result * (n - k + r) / r;
  return result;
}

Graph even_cycle(std::size_t s) {
  require_s(s);
  Graph g(2 * s);
  for (std::size_t i = 0; i < s; ++i) {
    g.add_edge(i, s + i);                // x_i - y_i
    g.add_edge(s + i, (i + 1) % s);      // y_i - x_{i+1}
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < s; ++i) labels.push_back("y" + std::to_string(i + 1));
  g.set_labels(std::move(labels));
  return g;
}

BipartiteView even_cycle_bipartition(std::size_t s) {
  std::vector<Vertex> xs(s), ys(s);
  for (std::size_t i = 0; i < s; ++i) {
    xs[i] = i;
    ys[i] = s + i;
  }
  return make_bipartite_view(even_cycle(s), std::move(xs), std::move(ys));
}

Graph cycle_bipartite_complement(std::size_t s) {
  return bipartite_complement(even_cycle(s), even_cycle_bipartition(s));
}

BigInt first_row(std::size_t s, std::size_t j) {
  require_s(s);
  if (j < 2 || j >= s) return 0;
  const Int S = static_cast<Int>(s), J = static_cast<Int>(j);
  BigInt total = 0;
  for (Int k = 1; k <= J - 1; ++k)
    for (Int c = 1; c <= k; ++c) {
      const BigInt numerator = S * binomial(k - 1, c - 1) *
                               binomial(S - k - 1, c - 1) *
                               binomial(S - k - c, J - k);
      total += exact_divide(numerator, c, "first row");
    }
  return total;
}

BigInt count_subsets_by_components(std::size_t s, std::size_t j, std::size_t m,
                                   std::size_t a) {
  require_s(s);
  if (m == 0)
    throw PreconditionViolated("block count m must be at least 1");
  if (j >= 2 * s) return 0;  // only proper subsets
  const Int T = 2 * static_cast<Int>(s), J = static_cast<Int>(j),
            M = static_cast<Int>(m), A = static_cast<Int>(a);
  const BigInt numerator = T * binomial(T - J - M, A) *
                           binomial(J - M - A - 1, M - 1) *
                           binomial(T - J - 1, M - 1);
  return exact_divide(numerator, M, "w(j,m,a)");
}

BigInt second_row(std::size_t s, std::size_t j) {
  require_s(s);
  if (j < 4 || j > 2 * s - 2) return 0;
  BigInt total = 0;
  for (std::size_t m = 2; m <= j / 2; ++m)
    for (std::size_t a = 0; a + 2 * m <= j; ++a)
      total += (m - 1) * count_subsets_by_components(s, j, m, a);
  return total;
}

BigInt second_row_factored(std::size_t s, std::size_t j) {
  require_s(s);
  if (j < 4 || j > 2 * s - 2) return 0;
  const Int T = 2 * static_cast<Int>(s), J = static_cast<Int>(j);
  BigInt total = 0;
  for (Int m = 2; m <= J / 2; ++m) {
    BigInt inner = 0;
    for (Int a = 0; a <= J - 2 * m; ++a)
      inner += binomial(J - m - a - 1, m - 1) * binomial(T - J - m, a);
    total += exact_divide(T * (m - 1) * binomial(T - J - 1, m - 1) * inner, m,
                          "factored second row");
  }
  return total;
}

BettiDiagram full_diagram_cbc(std::size_t s, Prime field) {
  require_s(s);
  BettiDiagram d(2 * s, field.value);
  auto put = [&](std::size_t i, std::size_t j, const BigInt& value) {
    d.set(i, j, value.convert_to<std::uint64_t>());
  };
  for (std::size_t j = 2; j + 1 <= s; ++j) put(j - 2, j, first_row(s, j));
  for (std::size_t j = 4; j <= 2 * s - 2; ++j) put(j - 3, j, second_row(s, j));
  d.set(2 * s - 4, 2 * s, 1);
  return d;
}

bool neighborhood_identity_check(std::size_t s,
                                 std::span<const std::size_t> w_x) {
  require_s(s);
  if (w_x.empty())
    throw PreconditionViolated("W_X must be nonempty");
  const Graph cycle = even_cycle(s);
  VertexSet members(s), neighborhood(2 * s);
  for (std::size_t x : w_x) {
    if (x >= s) throw SubsetOutOfRange("x index out of range");
    members.set(x);
    neighborhood |= cycle.neighbors(x);
  }
  // C_X joins x_i and x_j when they share a neighbor in C_2s.
  const Graph c_x = induced_subgraph(cycle_graph(s), members);
  return neighborhood.count() ==
         members.count() + connected_components(c_x).size();
}

}  // namespace hochster
