#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>

#include "hochster/betti.hpp"
#include "hochster/graph.hpp"

namespace hochster {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an exact division inside a closed formula leaves a remainder.
class FormulaIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// C(n, k) with the convention C(n, k) = 0 for k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// The even cycle C_2s on x_1..x_s (vertices 0..s-1) and y_1..y_s (s..2s-1)
/// with edges {x_i, y_i} and {y_i, x_{i+1}}.
Graph even_cycle(std::size_t s);
BipartiteView even_cycle_bipartition(std::size_t s);

/// Bipartite complement of the even cycle C_2s, same vertex numbering.
Graph cycle_bipartite_complement(std::size_t s);

/// β_{j-2,j}(I(C_2s^bc)); zero for j >= s and j < 2.
BigInt first_row(std::size_t s, std::size_t j);

/// β_{j-3,j}(I(C_2s^bc)) in the form summing (m - 1) w(j, m, a) over the
/// block count m and isolated count a; zero for j >= 2s - 1 and j < 4.
BigInt second_row(std::size_t s, std::size_t j);

/// The same row written with the factor t(m - 1)/m pulled out of the sum over
/// a, t = 2s.
BigInt second_row_factored(std::size_t s, std::size_t j);

/// Closed-form Betti diagram of I(C_2s^bc): first row, second row and the
/// single entry β_{2s-4,2s} = 1. The values do not depend on the field;
/// `field` only labels the diagram.
BettiDiagram full_diagram_cbc(std::size_t s, Prime field = Prime{2});

/// Number of proper subsets W of V(C_2s), |W| = j, such that C_2s[W] has `a`
/// isolated vertices and m >= 1 components that are not isolated vertices.
BigInt count_subsets_by_components(std::size_t s, std::size_t j, std::size_t m,
                                   std::size_t a);

/// |N_{C_2s}(W_X)| = |W_X| + #components(C_X[W_X]), with C_X the cycle
/// x_1 x_2 ... x_s. `w_x` holds 0-based indices into X.
bool neighborhood_identity_check(std::size_t s, std::span<const std::size_t> w_x);

}  // namespace hochster
