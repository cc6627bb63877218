#include "tricover/hyperplane.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tricover {

Hyperplane normalize_hyperplane(std::vector<long long> coeffs, long long offset) {
  unsigned long long g = 0;
  for (long long c : coeffs) g = std::gcd(g, static_cast<unsigned long long>(c < 0 ? -c : c));
  if (g == 0) throw std::invalid_argument("normalize_hyperplane: zero normal vector");
  g = std::gcd(g, static_cast<unsigned long long>(offset < 0 ? -offset : offset));
  auto div = static_cast<long long>(g);
  for (long long& c : coeffs) c /= div;
  offset /= div;
  for (long long c : coeffs) {
    if (c == 0) continue;
    if (c < 0) {
      for (long long& x : coeffs) x = -x;
      offset = -offset;
    }
    break;
  }
  return Hyperplane{std::move(coeffs), offset};
}

bool incident(const Hyperplane& h, const GridPoint& p) {
  // __int128 keeps arbitrary parsed coefficients times coordinates exact.
  __int128 dot = 0;
  for (size_t i = 0; i < h.coeffs.size(); ++i) dot += static_cast<__int128>(h.coeffs[i]) * p[i];
  return dot == h.offset;
}

std::vector<StandardHyperplane> standard_hyperplanes(const GridShape& shape) {
  std::vector<StandardHyperplane> out;
  out.reserve(static_cast<size_t>(shape.d + 1) * static_cast<size_t>(shape.n));
  for (int i = 0; i < shape.d; ++i) {
    std::vector<long long> e(static_cast<size_t>(shape.d), 0);
    e[static_cast<size_t>(i)] = 1;
    for (int c = 0; c < shape.n; ++c) out.push_back({Hyperplane{e, c}, c == 0});
  }
  std::vector<long long> ones(static_cast<size_t>(shape.d), 1);
  for (int c = 0; c < shape.n; ++c)
    out.push_back({Hyperplane{ones, shape.n - 1 - c}, c == 0});
  return out;
}

std::vector<GridPoint> covered_points(const Hyperplane& h, const GridShape& shape) {
  if (h.coeffs.size() != static_cast<size_t>(shape.d))
    throw std::invalid_argument("covered_points: dimension mismatch");
  std::vector<GridPoint> out;
  for (const GridPoint& p : enumerate_points(shape))
    if (incident(h, p)) out.push_back(p);
  return out;
}

namespace {

// Laplace expansion; matrices are at most 5x5 here (d <= 6) with coordinate-sized
// entries, so long long never overflows.
long long det(const std::vector<std::vector<long long>>& m) {
  size_t s = m.size();
  if (s == 0) return 1;
  if (s == 1) return m[0][0];
  long long sum = 0;
  std::vector<std::vector<long long>> minor(s - 1, std::vector<long long>(s - 1));
  for (size_t col = 0; col < s; ++col) {
    if (m[0][col] == 0) continue;
    for (size_t i = 1; i < s; ++i) {
      size_t mj = 0;
      for (size_t j = 0; j < s; ++j) {
        if (j == col) continue;
        minor[i - 1][mj++] = m[i][j];
      }
    }
    long long term = m[0][col] * det(minor);
    sum += (col % 2 == 0) ? term : -term;
  }
  return sum;
}

// Normal of the affine hull of q0..q_{d-1} via cofactors of the difference
// matrix; the zero vector signals affine dependence.
std::vector<long long> spanning_normal(const std::vector<const GridPoint*>& pts, int d) {
  std::vector<std::vector<long long>> diff(static_cast<size_t>(d - 1),
                                           std::vector<long long>(static_cast<size_t>(d)));
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < d; ++j)
      diff[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
          (*pts[static_cast<size_t>(i)])[static_cast<size_t>(j)] -
          (*pts[0])[static_cast<size_t>(j)];
  std::vector<long long> normal(static_cast<size_t>(d));
  std::vector<std::vector<long long>> minor(static_cast<size_t>(d - 1),
                                            std::vector<long long>(static_cast<size_t>(d - 1)));
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d - 1; ++r) {
      int mc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[static_cast<size_t>(r)][static_cast<size_t>(mc++)] =
            diff[static_cast<size_t>(r)][static_cast<size_t>(c)];
      }
    }
    long long m = det(minor);
    normal[static_cast<size_t>(j)] = (j % 2 == 0) ? m : -m;
  }
  return normal;
}

}  // namespace

std::vector<Hyperplane> enumerate_candidate_hyperplanes(const GridShape& shape, bool prune) {
  const std::vector<GridPoint> points = enumerate_points(shape);
  const int d = shape.d;
  std::set<Hyperplane> seen;

  if (d == 1) {
    for (const GridPoint& p : points) seen.insert(Hyperplane{{1}, p[0]});
  } else {
    std::vector<size_t> idx(static_cast<size_t>(d));
    std::vector<const GridPoint*> chosen(static_cast<size_t>(d));
    // All d-subsets of the point list, in index order.
    auto rec = [&](auto&& self, size_t slot, size_t first) -> void {
      if (slot == static_cast<size_t>(d)) {
        for (size_t i = 0; i < static_cast<size_t>(d); ++i) chosen[i] = &points[idx[i]];
        std::vector<long long> normal = spanning_normal(chosen, d);
        if (std::all_of(normal.begin(), normal.end(), [](long long v) { return v == 0; }))
          return;  // affinely dependent
        long long offset = 0;
        for (int j = 0; j < d; ++j) offset += normal[static_cast<size_t>(j)] * (*chosen[0])[static_cast<size_t>(j)];
        seen.insert(normalize_hyperplane(std::move(normal), offset));
        return;
      }
      for (size_t i = first; i + (static_cast<size_t>(d) - slot) <= points.size(); ++i) {
        idx[slot] = i;
        self(self, slot + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }

  // Guarantee coverage for degenerate shapes (n=1 has no spanned hyperplane for
  // d >= 2): fall back to the first-axis hyperplane through each uncovered point.
  for (const GridPoint& p : points) {
    bool covered = std::any_of(seen.begin(), seen.end(),
                               [&](const Hyperplane& h) { return incident(h, p); });
    if (!covered) {
      std::vector<long long> e(static_cast<size_t>(d), 0);
      e[0] = 1;
      seen.insert(Hyperplane{std::move(e), p[0]});
    }
  }

  std::vector<Hyperplane> candidates(seen.begin(), seen.end());
  if (!prune) return candidates;

  // Dominance pruning on covered sets. Distinct spanned hyperplanes never cover
  // identical sets (the set pins the span), so only strict subsets are removed;
  // every removed candidate is dominated by a kept one because strict inclusion
  // is acyclic.
  const size_t words = (points.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(candidates.size(),
                                               std::vector<std::uint64_t>(words, 0));
  std::vector<int> popcount(candidates.size(), 0);
  for (size_t c = 0; c < candidates.size(); ++c) {
    for (size_t i = 0; i < points.size(); ++i) {
      if (incident(candidates[c], points[i])) {
        bits[c][i / 64] |= std::uint64_t{1} << (i % 64);
        ++popcount[c];
      }
    }
  }
  std::vector<Hyperplane> kept;
  for (size_t a = 0; a < candidates.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < candidates.size() && !dominated; ++b) {
      if (popcount[b] <= popcount[a]) continue;
      bool subset = true;
      for (size_t w = 0; w < words && subset; ++w)
        subset = (bits[a][w] & ~bits[b][w]) == 0;
      dominated = subset;
    }
    if (!dominated) kept.push_back(candidates[a]);
  }
  return kept;
}

}  // namespace tricover
