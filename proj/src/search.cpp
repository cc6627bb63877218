#include "tricover/search.hpp"

#include <algorithm>
#include <map>

#include "tricover/constructions.hpp"
#include "tricover/lp.hpp"
#include "tricover/simplex.hpp"

namespace tricover {

namespace {

long floor_to_long(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor_to_long: out of range");
  return q.get_si();
}

// Incidence of the pruned candidate set, shared by f_int / greedy / brute force.
struct Instance {
  GridShape shape;
  std::vector<GridPoint> points;
  std::vector<Hyperplane> cands;
  std::vector<std::vector<int>> pt_cands;  // point -> ascending candidate indices
  std::vector<std::vector<int>> cand_pts;  // candidate -> ascending point indices
  int max_line = 1;                        // most points on one candidate

  explicit Instance(const CoverLP& lp)
      : shape(lp.shape), points(lp.points), cands(lp.columns), pt_cands(lp.incidence) {
    cand_pts.assign(cands.size(), {});
    for (size_t i = 0; i < pt_cands.size(); ++i)
      for (int c : pt_cands[i]) cand_pts[static_cast<size_t>(c)].push_back(static_cast<int>(i));
    for (const auto& pts : cand_pts)
      max_line = std::max(max_line, static_cast<int>(pts.size()));
  }
};

IntegerCover cover_from_counts(const GridShape& shape, int k,
                               const std::vector<Hyperplane>& cands,
                               const std::vector<int>& mult) {
  IntegerCover cover;
  cover.shape = shape;
  cover.k = k;
  for (size_t c = 0; c < mult.size(); ++c)
    if (mult[c] > 0) cover.multiplicities.push_back({cands[c], mult[c]});
  canonicalize(cover);
  return cover;
}

// Independent of the candidate incidence on purpose: checks a cover against the
// raw grid so corrupt seeds can never slip in as incumbents.
bool is_k_cover(const IntegerCover& cover, const std::vector<GridPoint>& points, int k) {
  for (const auto& p : points) {
    long got = 0;
    for (const auto& e : cover.multiplicities)
      if (incident(e.hyperplane, p)) got += e.multiplicity;
    if (got < k) return false;
  }
  return true;
}

struct BranchAndBound {
  const Instance& inst;
  int k;
  long long node_limit;
  bool use_lp;
  long lb_root;

  std::vector<int> deficit;    // k - coverage per point (may go negative)
  std::vector<int> mult;       // per candidate
  std::vector<char> excluded;  // per candidate, scoped to the current branch
  std::vector<int> chosen;
  long total_deficit = 0;

  long ub;
  std::optional<IntegerCover> best;
  long long nodes = 0;
  bool aborted = false;

  BranchAndBound(const Instance& in, int kk, long long limit, bool lp, long root, long ub0)
      : inst(in), k(kk), node_limit(limit), use_lp(lp), lb_root(root), ub(ub0) {
    deficit.assign(inst.points.size(), k);
    mult.assign(inst.cands.size(), 0);
    excluded.assign(inst.cands.size(), 0);
    total_deficit = static_cast<long>(inst.points.size()) * k;
  }

  void apply(int c, int dir) {
    mult[static_cast<size_t>(c)] += dir;
    for (int p : inst.cand_pts[static_cast<size_t>(c)]) {
      int& d = deficit[static_cast<size_t>(p)];
      if (dir > 0) {
        if (d > 0) --total_deficit;
        --d;
      } else {
        ++d;
        if (d > 0) ++total_deficit;
      }
    }
  }

  // Exact LP over the remaining deficits, restricted to usable candidates.
  // Infeasible means this subtree cannot complete at all.
  bool lp_prunes(long count) {
    std::vector<int> rows;
    for (size_t i = 0; i < deficit.size(); ++i)
      if (deficit[i] > 0) rows.push_back(static_cast<int>(i));
    std::vector<int> col_of(inst.cands.size(), -1);
    int ncols = 0;
    for (int i : rows)
      for (int c : inst.pt_cands[static_cast<size_t>(i)])
        if (!excluded[static_cast<size_t>(c)] && mult[static_cast<size_t>(c)] < k &&
            col_of[static_cast<size_t>(c)] == -1)
          col_of[static_cast<size_t>(c)] = ncols++;
    DenseLP lp;
    lp.num_vars = ncols;
    lp.objective.assign(static_cast<size_t>(ncols), Rational(1));
    lp.rows.assign(rows.size(), std::vector<Rational>(static_cast<size_t>(ncols), Rational(0)));
    lp.rhs.resize(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      lp.rhs[r] = deficit[static_cast<size_t>(rows[r])];
      for (int c : inst.pt_cands[static_cast<size_t>(rows[r])])
        if (col_of[static_cast<size_t>(c)] >= 0)
          lp.rows[r][static_cast<size_t>(col_of[static_cast<size_t>(c)])] = 1;
    }
    DenseLPResult res = solve_min_ge(lp);
    if (res.status == LPStatus::Infeasible) return true;
    return count + ceil_to_long(res.objective) >= ub;
  }

  void dfs(long count) {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    int branch_pt = -1, maxdef = 0;
    for (size_t i = 0; i < deficit.size(); ++i)
      if (deficit[i] > maxdef) {
        maxdef = deficit[i];
        branch_pt = static_cast<int>(i);
      }
    if (branch_pt == -1) {
      if (count < ub) {
        ub = count;
        best = cover_from_counts(inst.shape, k, inst.cands, mult);
      }
      return;
    }
    long lb = std::max({lb_root, count + maxdef,
                        count + (total_deficit + inst.max_line - 1) / inst.max_line});
    if (lb >= ub) return;
    if (use_lp && lp_prunes(count)) return;

    std::vector<int> children;
    for (int c : inst.pt_cands[static_cast<size_t>(branch_pt)])
      if (!excluded[static_cast<size_t>(c)] && mult[static_cast<size_t>(c)] < k)
        children.push_back(c);
    size_t marked = 0;
    for (size_t i = 0; i < children.size(); ++i) {
      apply(children[i], +1);
      chosen.push_back(children[i]);
      dfs(count + 1);
      chosen.pop_back();
      apply(children[i], -1);
      if (aborted) break;
      // elder siblings are barred from the rest of this subtree, so every
      // multiset is generated exactly once
      excluded[static_cast<size_t>(children[i])] = 1;
      ++marked;
    }
    for (size_t i = 0; i < marked; ++i) excluded[static_cast<size_t>(children[i])] = 0;
  }
};

}  // namespace

IntegerCover greedy_cover(const GridShape& shape, int k) {
  if (k < 1) throw std::invalid_argument("greedy_cover: k must be >= 1");
  Instance inst(build_cover_lp(shape, true));
  std::vector<int> deficit(inst.points.size(), k), mult(inst.cands.size(), 0);
  long remaining = static_cast<long>(inst.points.size()) * k;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (size_t c = 0; c < inst.cands.size(); ++c) {
      int gain = 0;
      for (int p : inst.cand_pts[c])
        if (deficit[static_cast<size_t>(p)] > 0) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(c);
      }
    }
    if (best == -1) throw std::logic_error("greedy_cover: uncoverable point");
    ++mult[static_cast<size_t>(best)];
    for (int p : inst.cand_pts[static_cast<size_t>(best)])
      if (deficit[static_cast<size_t>(p)]-- > 0) --remaining;
  }
  return cover_from_counts(shape, k, inst.cands, mult);
}

SearchResult f_int(const GridShape& shape, int k, const SearchConfig& config) {
  if (k < 1) throw std::invalid_argument("f_int: k must be >= 1");
  CoverLP clp = build_cover_lp(shape, true);
  Instance inst(clp);

  LPSolution relax = solve_lp(clp);
  long lb_root = ceil_to_long(Rational(k) * relax.optimum);

  std::vector<IntegerCover> seeds;
  seeds.push_back(greedy_cover(shape, k));
  if (k == 1) seeds.push_back(cover_k1_general(shape));
  if (k == 2) seeds.push_back(cover_k2_general(shape));
  if (k == 3 && shape.d >= 3) seeds.push_back(cover_k3_general(shape));
  if (shape.d == 2 && k <= 4) seeds.push_back(kcover_2d(shape.n, k));
  if (shape.d == 2 && k >= 2 && lifted_cover_in_threshold(shape.n, k))
    seeds.push_back(lifted_cover_2d(shape.n, k));
  if (block_cover_in_threshold(shape, k)) seeds.push_back(block_cover(shape, k));

  std::optional<IntegerCover> best;
  long ub = 0;
  for (auto& s : seeds) {
    if (!is_k_cover(s, inst.points, k)) continue;
    long card = s.cardinality();
    if (!best || card < ub) {
      ub = card;
      best = std::move(s);
    }
  }
  if (config.initial_upper_bound && *config.initial_upper_bound < ub)
    ub = *config.initial_upper_bound;

  BranchAndBound bnb(inst, k, config.node_limit,
                     config.use_lp_bound.value_or(shape.d == 2), lb_root, ub);
  bnb.best = std::move(best);
  if (lb_root < bnb.ub) bnb.dfs(0);

  SearchResult result;
  result.nodes_explored = bnb.nodes;
  result.optimum = bnb.ub;
  if (bnb.best && bnb.best->cardinality() == bnb.ub) {
    result.cover = std::move(*bnb.best);
    result.proven = !bnb.aborted;
  } else {
    // only reachable when initial_upper_bound undercut every cover we found;
    // there is no witness, so the value cannot be reported as proven
    result.cover.shape = shape;
    result.cover.k = k;
    result.proven = false;
  }
  return result;
}

std::optional<IntegerCover> brute_force_cover(const GridShape& shape, int k,
                                              long max_cardinality) {
  if (k < 1) throw std::invalid_argument("brute_force_cover: k must be >= 1");
  Instance inst(build_cover_lp(shape, true));
  const int C = static_cast<int>(inst.cands.size());
  std::vector<int> suffix_max(static_cast<size_t>(C) + 1, 0);
  for (int c = C - 1; c >= 0; --c)
    suffix_max[static_cast<size_t>(c)] =
        std::max(suffix_max[static_cast<size_t>(c) + 1],
                 static_cast<int>(inst.cand_pts[static_cast<size_t>(c)].size()));

  std::vector<int> deficit(inst.points.size(), k), mult(static_cast<size_t>(C), 0);
  std::vector<int> chosen;
  long total_deficit = static_cast<long>(inst.points.size()) * k;
  long long nodes = 0;
  const long long node_cap = 400'000'000;

  auto apply = [&](int c, int dir) {
    mult[static_cast<size_t>(c)] += dir;
    for (int p : inst.cand_pts[static_cast<size_t>(c)]) {
      int& d = deficit[static_cast<size_t>(p)];
      if (dir > 0) {
        if (d > 0) --total_deficit;
        --d;
      } else {
        ++d;
        if (d > 0) ++total_deficit;
      }
    }
  };

  // Multisets in non-decreasing candidate order; multiplicity capped at k since
  // a k-th repeat already saturates every point the candidate touches.
  auto dfs = [&](auto&& self, int start, int slots) -> bool {
    if (total_deficit == 0) return true;
    if (++nodes > node_cap)
      throw BudgetExceeded("brute_force_cover: enumeration budget exhausted");
    if (slots == 0) return false;
    int first_def = -1, maxdef = 0;
    for (size_t i = 0; i < deficit.size(); ++i)
      if (deficit[i] > 0) {
        if (first_def == -1) first_def = static_cast<int>(i);
        maxdef = std::max(maxdef, deficit[i]);
      }
    if (maxdef > slots) return false;
    if (total_deficit > static_cast<long>(slots) * suffix_max[static_cast<size_t>(start)])
      return false;
    long capacity = 0;
    for (int c : inst.pt_cands[static_cast<size_t>(first_def)])
      if (c >= start) capacity += k - mult[static_cast<size_t>(c)];
    if (capacity < deficit[static_cast<size_t>(first_def)]) return false;

    for (int c = start; c < C; ++c) {
      if (mult[static_cast<size_t>(c)] >= k) continue;
      bool useful = false;
      for (int p : inst.cand_pts[static_cast<size_t>(c)])
        if (deficit[static_cast<size_t>(p)] > 0) {
          useful = true;
          break;
        }
      if (!useful) continue;
      apply(c, +1);
      chosen.push_back(c);
      if (self(self, c, slots - 1)) return true;
      chosen.pop_back();
      apply(c, -1);
    }
    return false;
  };

  long start_size = std::max<long>(k, (total_deficit + inst.max_line - 1) / inst.max_line);
  for (long size = start_size; size <= max_cardinality; ++size)
    if (dfs(dfs, 0, static_cast<int>(size)))
      return cover_from_counts(shape, k, inst.cands, mult);
  return std::nullopt;
}

RestrictedIPSolution solve_restricted_ip(int n, int k) {
  if (n < 1 || k < 2) throw std::invalid_argument("solve_restricted_ip: need n >= 1, k >= 2");
  const int m = k - 1, V = 3 * m;
  auto a_idx = [&](int r) { return r - 1; };
  auto b_idx = [&](int s) { return m + s - 1; };
  auto g_idx = [&](int t) { return 2 * m + t - 1; };

  std::vector<std::vector<Rational>> base_rows;
  for (int r = 1; r <= m; ++r)
    for (int s = 1; s <= m; ++s) {
      int t = 2 * k - 2 - r - s;
      if (t < 1 || t > m) continue;
      std::vector<Rational> row(static_cast<size_t>(V), Rational(0));
      row[static_cast<size_t>(a_idx(r))] = 1;
      row[static_cast<size_t>(b_idx(s))] = 1;
      row[static_cast<size_t>(g_idx(t))] = 1;
      base_rows.push_back(std::move(row));
    }
  const std::pair<int, int> corners[3] = {
      {a_idx(m), b_idx(m)}, {a_idx(m), g_idx(m)}, {b_idx(m), g_idx(m)}};
  for (auto [i, j] : corners) {
    std::vector<Rational> row(static_cast<size_t>(V), Rational(0));
    row[static_cast<size_t>(i)] = 1;
    row[static_cast<size_t>(j)] = 1;
    base_rows.push_back(std::move(row));
  }

  // Branch and bound on variable bounds; every variable can be capped at n
  // because a single term worth n already satisfies any constraint through it.
  std::vector<long long> lo(static_cast<size_t>(V), 0), hi(static_cast<size_t>(V), n);
  std::vector<long long> incumbent(static_cast<size_t>(V), (n + 1) / 2);
  long long ub = static_cast<long long>(V) * ((n + 1) / 2);
  long long nodes = 0;

  auto dfs = [&](auto&& self) -> void {
    if (++nodes > 1'000'000)
      throw BudgetExceeded("solve_restricted_ip: node budget exhausted");
    DenseLP lp;
    lp.num_vars = V;
    lp.objective.assign(static_cast<size_t>(V), Rational(1));
    lp.rows = base_rows;
    lp.rhs.assign(base_rows.size(), Rational(n));
    for (int i = 0; i < V; ++i) {
      if (lo[static_cast<size_t>(i)] > 0) {
        std::vector<Rational> row(static_cast<size_t>(V), Rational(0));
        row[static_cast<size_t>(i)] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(static_cast<long>(lo[static_cast<size_t>(i)])));
      }
      if (hi[static_cast<size_t>(i)] < n) {
        std::vector<Rational> row(static_cast<size_t>(V), Rational(0));
        row[static_cast<size_t>(i)] = -1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(static_cast<long>(-hi[static_cast<size_t>(i)])));
      }
    }
    DenseLPResult res = solve_min_ge(lp);
    if (res.status == LPStatus::Infeasible) return;
    if (ceil_to_long(res.objective) >= ub) return;
    int frac = -1;
    for (int i = 0; i < V; ++i)
      if (res.x[static_cast<size_t>(i)].get_den() != 1) {
        frac = i;
        break;
      }
    if (frac == -1) {
      long long value = 0;
      for (int i = 0; i < V; ++i) value += res.x[static_cast<size_t>(i)].get_num().get_si();
      if (value < ub) {
        ub = value;
        for (int i = 0; i < V; ++i)
          incumbent[static_cast<size_t>(i)] = res.x[static_cast<size_t>(i)].get_num().get_si();
      }
      return;
    }
    long split = floor_to_long(res.x[static_cast<size_t>(frac)]);
    long long save_hi = hi[static_cast<size_t>(frac)], save_lo = lo[static_cast<size_t>(frac)];
    hi[static_cast<size_t>(frac)] = split;
    self(self);
    hi[static_cast<size_t>(frac)] = save_hi;
    lo[static_cast<size_t>(frac)] = split + 1;
    self(self);
    lo[static_cast<size_t>(frac)] = save_lo;
  };
  dfs(dfs);

  RestrictedIPSolution sol;
  sol.optimum = ub;
  sol.alpha.assign(incumbent.begin(), incumbent.begin() + m);
  sol.beta.assign(incumbent.begin() + m, incumbent.begin() + 2 * m);
  sol.gamma.assign(incumbent.begin() + 2 * m, incumbent.end());
  return sol;
}

}  // namespace tricover
