#include "tricover/lp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tricover/simplex.hpp"

namespace tricover {

CoverLP build_cover_lp(const GridShape& shape, bool prune) {
  CoverLP lp{shape, enumerate_candidate_hyperplanes(shape, prune),
             enumerate_points(shape), {}};
  lp.incidence.assign(lp.points.size(), {});
  for (size_t j = 0; j < lp.columns.size(); ++j) {
    for (const auto& p : covered_points(lp.columns[j], shape)) {
      auto it = std::lower_bound(lp.points.begin(), lp.points.end(), p);
      lp.incidence[static_cast<size_t>(it - lp.points.begin())].push_back(
          static_cast<int>(j));
    }
  }
  return lp;
}

LPSolution solve_lp(const CoverLP& lp) {
  const size_t m = lp.points.size(), n = lp.columns.size();
  DenseLP dense;
  dense.num_vars = static_cast<int>(n);
  dense.rows.assign(m, std::vector<Rational>(n, Rational(0)));
  dense.rhs.assign(m, Rational(1));
  dense.objective.assign(n, Rational(1));
  for (size_t i = 0; i < m; ++i)
    for (int j : lp.incidence[i]) dense.rows[i][static_cast<size_t>(j)] = 1;

  DenseLPResult res = solve_min_ge(dense);
  LPSolution sol;
  if (res.status != LPStatus::Optimal) {
    sol.status = SolveStatus::Infeasible;
    return sol;
  }
  sol.status = SolveStatus::Optimal;
  sol.optimum = res.objective;
  sol.pivots = res.pivots;

  sol.primal.shape = lp.shape;
  for (size_t j = 0; j < n; ++j)
    if (sgn(res.x[j]) != 0) sol.primal.weights.push_back({lp.columns[j], res.x[j]});
  canonicalize(sol.primal);

  sol.dual.shape = lp.shape;
  for (size_t i = 0; i < m; ++i)
    if (sgn(res.dual[i]) != 0) sol.dual.masses.push_back({lp.points[i], res.dual[i]});
  canonicalize(sol.dual);

  // Exact optimality audit: primal covers every point, dual loads no column
  // beyond 1, and both totals meet the optimum (strong duality).
  for (size_t i = 0; i < m; ++i) {
    Rational w = 0;
    for (int j : lp.incidence[i]) w += res.x[static_cast<size_t>(j)];
    if (w < 1) throw std::logic_error("solve_lp: primal infeasible at a point");
  }
  std::vector<Rational> colmass(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    for (int j : lp.incidence[i]) colmass[static_cast<size_t>(j)] += res.dual[i];
  for (size_t j = 0; j < n; ++j)
    if (colmass[j] > 1) throw std::logic_error("solve_lp: dual overloads a hyperplane");
  if (sol.primal.total_weight() != sol.optimum || sol.dual.total_mass() != sol.optimum)
    throw std::logic_error("solve_lp: strong duality check failed");
  return sol;
}

LPSolution f_star(const GridShape& shape) { return solve_lp(build_cover_lp(shape, true)); }

FractionalCover scaled_dual_from_ip(const std::vector<long long>& alpha,
                                    const std::vector<long long>& beta,
                                    const std::vector<long long>& gamma, int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("scaled_dual_from_ip: need n >= 1, k >= 2");
  const size_t want = static_cast<size_t>(k - 1);
  if (alpha.size() != want || beta.size() != want || gamma.size() != want)
    throw std::invalid_argument("scaled_dual_from_ip: vectors must have k-1 entries");
  for (const auto* v : {&alpha, &beta, &gamma})
    for (long long e : *v)
      if (e < 0) throw std::invalid_argument("scaled_dual_from_ip: negative entry");

  // alpha_i sits on x = k-1-i, beta_i on y = k-1-i, gamma_i on x+y = i, so a
  // grid point (x, y) collects alpha_{k-1-x} + beta_{k-1-y} + gamma_{x+y}
  // (terms with index 0 absent). Feasible iff every point collects >= n.
  GridShape shape(k, 2);
  for (const auto& p : enumerate_points(shape)) {
    long long got = 0;
    if (p[0] <= k - 2) got += alpha[static_cast<size_t>(k - 2 - p[0])];
    if (p[1] <= k - 2) got += beta[static_cast<size_t>(k - 2 - p[1])];
    if (p[0] + p[1] >= 1) got += gamma[static_cast<size_t>(p[0] + p[1] - 1)];
    if (got < n)
      throw std::invalid_argument("scaled_dual_from_ip: point (" + std::to_string(p[0]) +
                                  "," + std::to_string(p[1]) + ") gets " +
                                  std::to_string(got) + " < n");
  }

  FractionalCover cover;
  cover.shape = shape;
  for (int i = 1; i <= k - 1; ++i) {
    Rational den(n);
    // Explicit return type: otherwise the deduced gmpxx expression template
    // would hold a dangling reference to the numerator temporary.
    auto weight = [&](long long v) -> Rational { return Rational(static_cast<long>(v)) / den; };
    if (alpha[static_cast<size_t>(i - 1)] != 0)
      cover.weights.push_back(
          {Hyperplane{{1, 0}, k - 1 - i}, weight(alpha[static_cast<size_t>(i - 1)])});
    if (beta[static_cast<size_t>(i - 1)] != 0)
      cover.weights.push_back(
          {Hyperplane{{0, 1}, k - 1 - i}, weight(beta[static_cast<size_t>(i - 1)])});
    if (gamma[static_cast<size_t>(i - 1)] != 0)
      cover.weights.push_back(
          {Hyperplane{{1, 1}, i}, weight(gamma[static_cast<size_t>(i - 1)])});
  }
  canonicalize(cover);
  return cover;
}

}  // namespace tricover
