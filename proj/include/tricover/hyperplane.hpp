#pragma once

#include <compare>
#include <vector>

#include "tricover/grid.hpp"

namespace tricover {

// Affine hyperplane {x : coeffs . x = offset} in canonical form: integer entries,
// gcd of all nonzero entries of (coeffs, offset) equal to 1, first nonzero
// coefficient positive. Two hyperplanes are geometrically equal iff their
// canonical forms are identical, so operator== doubles as geometric equality.
struct Hyperplane {
  std::vector<long long> coeffs;
  long long offset = 0;

  bool operator==(const Hyperplane&) const = default;
  // Lexicographic on (coeffs, offset); fixes the candidate order used everywhere.
  auto operator<=>(const Hyperplane& o) const {
    if (auto c = coeffs <=> o.coeffs; c != 0) return c;
    return offset <=> o.offset;
  }
};

// Scales away the content and fixes the sign. Throws std::invalid_argument if all
// coefficients are zero (offset alone does not determine a hyperplane).
Hyperplane normalize_hyperplane(std::vector<long long> coeffs, long long offset);

bool incident(const Hyperplane& h, const GridPoint& p);

// The axis hyperplanes x_i = c and the diagonals x_1+...+x_d = n-1-c for
// c in {0..n-1}; "bounding" marks c = 0 (the facets of the simplex hull).
struct StandardHyperplane {
  Hyperplane hyperplane;
  bool bounding = false;
};
std::vector<StandardHyperplane> standard_hyperplanes(const GridShape& shape);

// Grid points incident to h, in lex order.
std::vector<GridPoint> covered_points(const Hyperplane& h, const GridShape& shape);

// Every hyperplane spanned by d affinely independent grid points, deduplicated by
// canonical form and sorted. Any point on no spanned hyperplane (only possible in
// degenerate shapes such as n=1) gets the fallback x_1 = p_1 through it, so the
// result always covers the grid. With prune=true, candidates whose covered set is
// a strict subset of another candidate's are dropped; for covering problems this
// loses nothing because the dominating hyperplane can always be used instead.
std::vector<Hyperplane> enumerate_candidate_hyperplanes(const GridShape& shape, bool prune);

}  // namespace tricover
