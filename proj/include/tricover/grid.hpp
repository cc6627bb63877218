#pragma once

#include <cstdint>
#include <vector>

namespace tricover {

// The grid T_d(n): points of Z^d with nonnegative coordinates summing to at most
// n-1. n is the side length (points per edge in d=2), d the dimension.
struct GridShape {
  int n = 1;
  int d = 1;
  GridShape() = default;      // the one-point grid T_1(1)
  GridShape(int n_, int d_);  // throws std::invalid_argument unless n>=1, d>=1
  bool operator==(const GridShape&) const = default;
};

using GridPoint = std::vector<int>;  // exactly d coordinates; vector's < is the lex order

// All grid points in ascending lexicographic order.
std::vector<GridPoint> enumerate_points(const GridShape& shape);

// |T_d(n)| = C(n-1+d, d), computed exactly.
std::uint64_t point_count(const GridShape& shape);

bool in_grid(const GridShape& shape, const GridPoint& p);

}  // namespace tricover
