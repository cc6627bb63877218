#pragma once

#include <vector>

#include "tricover/cover.hpp"
#include "tricover/grid.hpp"
#include "tricover/hyperplane.hpp"
#include "tricover/rational.hpp"

namespace tricover {

// Covering LP for a grid: one column per candidate hyperplane (canonical order),
// one row per grid point (lex order), incidence stored per row.
struct CoverLP {
  GridShape shape;
  std::vector<Hyperplane> columns;
  std::vector<GridPoint> points;
  std::vector<std::vector<int>> incidence;  // row -> ascending column indices
};

CoverLP build_cover_lp(const GridShape& shape, bool prune = true);

enum class SolveStatus { Optimal, Infeasible };

// Exact optimum with both certificates. Strong duality (primal total == dual
// total == optimum) is asserted exactly inside solve_lp.
struct LPSolution {
  SolveStatus status = SolveStatus::Optimal;
  Rational optimum;
  FractionalCover primal;
  MassCertificate dual;
  long pivots = 0;
};

LPSolution solve_lp(const CoverLP& lp);

// f*(shape): minimum total weight of a fractional hyperplane cover.
LPSolution f_star(const GridShape& shape);

// Scales a feasible point of the restricted integer program down by n and
// interprets it as a fractional cover of T_2(k) on standard lines:
// alpha_i -> weight alpha_i/n on x = k-1-i, beta likewise on y, gamma on the
// diagonals. Throws std::invalid_argument if the scaled point is infeasible
// (some grid point of T_2(k) covered with total weight < 1).
FractionalCover scaled_dual_from_ip(const std::vector<long long>& alpha,
                                    const std::vector<long long>& beta,
                                    const std::vector<long long>& gamma, int n, int k);

}  // namespace tricover
