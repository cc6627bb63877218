#include "tricover/simplex.hpp"

#include <stdexcept>

namespace tricover {

namespace {

// Shared tableau state for the two phases. Columns are laid out as
// [structural x (n) | surplus s (m) | artificial a (m)], rhs kept separately.
// Rows with negative input rhs are sign-flipped once so the artificial start
// basis is feasible; 'sigma' remembers the flip for dual recovery.
struct Tableau {
  int m, n;
  std::vector<std::vector<Rational>> T;  // m rows, n+2m columns
  std::vector<Rational> rhs;
  std::vector<int> basis;   // basis[i] = column index basic in row i
  std::vector<int> sigma;   // +1/-1 per row
  std::vector<Rational> z;  // reduced costs c_j - c_B B^-1 A_j
  Rational value;           // c_B B^-1 b
  long pivots = 0;

  int cols() const { return n + 2 * m; }

  // Elementary row operations around (pr, pc); exact, with reused scratch.
  void pivot(int pr, int pc) {
    ++pivots;
    Rational piv = T[pr][pc];
    for (auto& v : T[pr]) v /= piv;
    rhs[pr] /= piv;
    Rational tmp;
    for (int i = 0; i < m; ++i) {
      if (i == pr || sgn(T[i][pc]) == 0) continue;
      Rational factor = T[i][pc];
      for (int j = 0; j < cols(); ++j) {
        if (sgn(T[pr][j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), T[pr][j].get_mpq_t());
        mpq_sub(T[i][j].get_mpq_t(), T[i][j].get_mpq_t(), tmp.get_mpq_t());
      }
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), rhs[pr].get_mpq_t());
      mpq_sub(rhs[i].get_mpq_t(), rhs[i].get_mpq_t(), tmp.get_mpq_t());
    }
    Rational zf = z[pc];
    if (sgn(zf) != 0) {
      for (int j = 0; j < cols(); ++j) {
        if (sgn(T[pr][j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), zf.get_mpq_t(), T[pr][j].get_mpq_t());
        mpq_sub(z[j].get_mpq_t(), z[j].get_mpq_t(), tmp.get_mpq_t());
      }
      value += zf * rhs[pr];  // objective moves by the (negative) reduced cost
    }
    basis[pr] = pc;
  }

  void reset_costs(const std::vector<Rational>& c_full) {
    z = c_full;
    value = 0;
    for (int i = 0; i < m; ++i) {
      const Rational& cb = c_full[static_cast<size_t>(basis[i])];
      if (sgn(cb) == 0) continue;
      value += cb * rhs[i];
      Rational tmp;
      for (int j = 0; j < cols(); ++j) {
        if (sgn(T[i][j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), cb.get_mpq_t(), T[i][j].get_mpq_t());
        mpq_sub(z[j].get_mpq_t(), z[j].get_mpq_t(), tmp.get_mpq_t());
      }
    }
  }

  // Lexicographic ratio-test tie-break: rows tied at the minimum ratio are
  // compared entry by entry along the anchor columns (the basis at the start of
  // the current phase), scaled by the pivot column. The anchor block is a
  // nonsingular basis inverse throughout, so two rows never tie on all of it;
  // the unique choice keeps every row lex-positive and degenerate plateaus short.
  int lex_smaller(int a, int b, int enter, const std::vector<int>& anchor) {
    for (int c : anchor) {
      Rational va = T[a][c] / T[a][enter];
      Rational vb = T[b][c] / T[b][enter];
      if (va != vb) return va < vb ? a : b;
    }
    return basis[a] < basis[b] ? a : b;  // unreachable for a nonsingular anchor
  }

  // Minimize with the current cost row over columns [0, allowed_cols).
  // Deterministic: steepest descent with lexicographic ties; Bland's least-index
  // rule remains as the anti-cycling backstop for long degenerate streaks.
  LPStatus optimize(int allowed_cols) {
    std::vector<int> anchor = basis;  // identity block at phase entry
    int degenerate_streak = 0;
    bool bland = false;
    const int bland_after = 1024;
    for (;;) {
      int enter = -1;
      if (!bland) {
        for (int j = 0; j < allowed_cols; ++j)
          if (sgn(z[j]) < 0 && (enter == -1 || z[j] < z[enter])) enter = j;
      } else {
        for (int j = 0; j < allowed_cols; ++j)
          if (sgn(z[j]) < 0) { enter = j; break; }
      }
      if (enter == -1) return LPStatus::Optimal;

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m; ++i) {
        if (sgn(T[i][enter]) <= 0) continue;
        Rational ratio = rhs[i] / T[i][enter];
        if (leave == -1 || ratio < best_ratio) {
          leave = i;
          best_ratio = ratio;
        } else if (ratio == best_ratio) {
          leave = bland ? (basis[i] < basis[leave] ? i : leave)
                        : lex_smaller(i, leave, enter, anchor);
        }
      }
      if (leave == -1) return LPStatus::Unbounded;
      degenerate_streak = sgn(best_ratio) == 0 ? degenerate_streak + 1 : 0;
      if (degenerate_streak >= bland_after) bland = true;
      pivot(leave, enter);
    }
  }
};

}  // namespace

DenseLPResult solve_min_ge(const DenseLP& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = lp.num_vars;
  if (static_cast<int>(lp.rhs.size()) != m || static_cast<int>(lp.objective.size()) != n)
    throw std::invalid_argument("solve_min_ge: inconsistent dimensions");
  for (const auto& row : lp.rows)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("solve_min_ge: row width mismatch");

  DenseLPResult result;
  if (m == 0) {  // x = 0 is optimal: objective costs are >= 0 in all our uses,
                 // but handle general costs by pushing negative ones to 0 anyway
    result.status = LPStatus::Optimal;
    result.x.assign(static_cast<size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j)
      if (sgn(lp.objective[static_cast<size_t>(j)]) < 0) return {LPStatus::Unbounded};
    result.objective = 0;
    return result;
  }

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.T.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(n + 2 * m)));
  tb.rhs.resize(static_cast<size_t>(m));
  tb.basis.resize(static_cast<size_t>(m));
  tb.sigma.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    int sg = sgn(lp.rhs[static_cast<size_t>(i)]) < 0 ? -1 : 1;
    tb.sigma[static_cast<size_t>(i)] = sg;
    for (int j = 0; j < n; ++j)
      tb.T[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          sg > 0 ? lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)]
                 : -lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    tb.T[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = -sg;  // surplus
    tb.T[static_cast<size_t>(i)][static_cast<size_t>(n + m + i)] = 1;  // artificial
    tb.rhs[static_cast<size_t>(i)] =
        sg > 0 ? lp.rhs[static_cast<size_t>(i)] : -lp.rhs[static_cast<size_t>(i)];
    tb.basis[static_cast<size_t>(i)] = n + m + i;
  }

  // Phase 1: minimize the artificial total over every column.
  std::vector<Rational> phase1(static_cast<size_t>(n + 2 * m), Rational(0));
  for (int i = 0; i < m; ++i) phase1[static_cast<size_t>(n + m + i)] = 1;
  tb.reset_costs(phase1);
  if (tb.optimize(n + 2 * m) != LPStatus::Optimal)
    throw std::logic_error("solve_min_ge: phase 1 cannot be unbounded");
  if (sgn(tb.value) > 0) {
    result.status = LPStatus::Infeasible;
    result.pivots = tb.pivots;
    return result;
  }
  // Drive leftover artificials out of the basis. The surplus block keeps every
  // tableau row nonzero on structural/surplus columns, so a pivot always exists.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[static_cast<size_t>(i)] < n + m) continue;
    int pc = -1;
    for (int j = 0; j < n + m; ++j)
      if (sgn(tb.T[static_cast<size_t>(i)][static_cast<size_t>(j)]) != 0) { pc = j; break; }
    if (pc == -1) throw std::logic_error("solve_min_ge: zero row with surplus block");
    tb.pivot(i, pc);
  }

  // Phase 2: original costs, artificials barred from entering.
  std::vector<Rational> phase2(static_cast<size_t>(n + 2 * m), Rational(0));
  for (int j = 0; j < n; ++j) phase2[static_cast<size_t>(j)] = lp.objective[static_cast<size_t>(j)];
  tb.reset_costs(phase2);
  LPStatus st = tb.optimize(n + m);
  result.status = st;
  result.pivots = tb.pivots;
  if (st != LPStatus::Optimal) return result;

  result.objective = tb.value;
  result.x.assign(static_cast<size_t>(n), Rational(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[static_cast<size_t>(i)] < n)
      result.x[static_cast<size_t>(tb.basis[static_cast<size_t>(i)])] = tb.rhs[static_cast<size_t>(i)];
  // Multipliers: c_B B^-1 shows up under the artificial identity block; undo the
  // row flips to express them against the original rows. With >= rows and a min
  // objective these come out nonnegative at optimality.
  result.dual.assign(static_cast<size_t>(m), Rational(0));
  for (int i = 0; i < m; ++i) {
    Rational y = 0;
    for (int r = 0; r < m; ++r) {
      int b = tb.basis[static_cast<size_t>(r)];
      if (b < n && sgn(tb.T[static_cast<size_t>(r)][static_cast<size_t>(n + m + i)]) != 0)
        y += phase2[static_cast<size_t>(b)] * tb.T[static_cast<size_t>(r)][static_cast<size_t>(n + m + i)];
    }
    result.dual[static_cast<size_t>(i)] = tb.sigma[static_cast<size_t>(i)] > 0 ? y : -y;
  }
  return result;
}

}  // namespace tricover
