#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tricover/cover.hpp"
#include "tricover/grid.hpp"

namespace tricover {

struct SearchConfig {
  long long node_limit = 10'000'000;
  std::optional<long> initial_upper_bound;  // seeds the incumbent when given
  // Residual-LP pruning at interior nodes. Unset picks the default for the
  // dimension (see f_int); the root bound ceil(k * f*) is always computed.
  std::optional<bool> use_lp_bound;
};

struct SearchResult {
  long optimum = 0;
  IntegerCover cover;
  long long nodes_explored = 0;
  bool proven = false;  // false when the node budget ran out first
};

// Minimum cardinality of an integer k-cover, by branch and bound over the pruned
// candidate hyperplanes: branch on the least-covered point (lex tie-break),
// children take its incident candidates in canonical order, each child excluding
// its elder siblings so no multiset is explored twice.
SearchResult f_int(const GridShape& shape, int k, const SearchConfig& config = {});

// Deterministic greedy k-cover (largest residual coverage, canonical tie-break);
// used to seed the incumbent and as a cheap upper bound anywhere.
IntegerCover greedy_cover(const GridShape& shape, int k);

// Independent oracle: iterative deepening over candidate multisets in
// non-decreasing canonical order, with only counting-based pruning. Returns a
// minimum k-cover of cardinality <= max_cardinality, or nullopt if none exists.
// Throws BudgetExceeded past the enumeration guard.
std::optional<IntegerCover> brute_force_cover(const GridShape& shape, int k,
                                              long max_cardinality);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Restricted integer program for standard-line k-covers of T_2(n) under
// non-increasing multiplicities: minimize sum(alpha)+sum(beta)+sum(gamma) over
// nonnegative integers subject to
//   alpha_r + beta_s + gamma_t >= n   for r+s+t = 2k-2, r,s,t in {1..k-1},
//   and the corner constraints alpha_{k-1}+beta_{k-1} >= n (three symmetric ones),
// i.e. the same family with one index allowed to be 0 and its term dropped.
struct RestrictedIPSolution {
  long long optimum = 0;
  std::vector<long long> alpha, beta, gamma;  // each of size k-1
};

RestrictedIPSolution solve_restricted_ip(int n, int k);

}  // namespace tricover
