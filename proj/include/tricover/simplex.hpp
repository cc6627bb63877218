#pragma once

#include <vector>

#include "tricover/rational.hpp"

namespace tricover {

// Exact dense two-phase simplex for
//     min  objective . x   s.t.   rows[i] . x >= rhs[i],   x >= 0.
// Pivoting is deterministic: steepest reduced cost with lowest-index tie-break,
// switching permanently to Bland's rule after a long degenerate streak so the
// method terminates on every input. Everything is exact rational arithmetic.
struct DenseLP {
  int num_vars = 0;
  std::vector<std::vector<Rational>> rows;  // each of size num_vars
  std::vector<Rational> rhs;
  std::vector<Rational> objective;          // size num_vars
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct DenseLPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;     // primal solution (num_vars)
  std::vector<Rational> dual;  // one multiplier per row; feasible for the dual
  long pivots = 0;
};

DenseLPResult solve_min_ge(const DenseLP& lp);

}  // namespace tricover
