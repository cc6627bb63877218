#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "tricover/grid.hpp"

using namespace tricover;

namespace {

// Independent binomial C(n-1+d, d) via incremental multiply/divide.
std::uint64_t binomial_points(int n, int d) {
  std::uint64_t r = 1;
  for (int i = 1; i <= d; ++i) r = r * static_cast<std::uint64_t>(n - 1 + i) / i;
  return r;
}

}  // namespace

TEST_CASE("point count matches enumeration and the binomial formula") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 8; ++n) {
      GridShape s(n, d);
      auto pts = enumerate_points(s);
      CHECK(pts.size() == point_count(s));
      CHECK(point_count(s) == binomial_points(n, d));
    }
  CHECK(point_count(GridShape(60, 6)) == 82598880);  // C(65,6)
  CHECK(point_count(GridShape(60, 6)) == binomial_points(60, 6));
}

TEST_CASE("point count satisfies the Pascal recurrence") {
  for (int d = 2; d <= 6; ++d)
    for (int n = 2; n <= 12; ++n)
      CHECK(point_count(GridShape(n, d)) ==
            point_count(GridShape(n - 1, d)) + point_count(GridShape(n, d - 1)));
}

TEST_CASE("enumeration is strictly ascending lex and in-grid") {
  GridShape s(5, 3);
  auto pts = enumerate_points(s);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  CHECK(pts.front() == GridPoint{0, 0, 0});
  CHECK(pts.back() == GridPoint{4, 0, 0});
  for (const auto& p : pts) {
    CHECK(in_grid(s, p));
    CHECK(std::accumulate(p.begin(), p.end(), 0) <= s.n - 1);
  }
}

TEST_CASE("grid membership") {
  GridShape s(3, 2);
  CHECK(in_grid(s, {0, 0}));
  CHECK(in_grid(s, {2, 0}));
  CHECK(in_grid(s, {1, 1}));
  CHECK_FALSE(in_grid(s, {2, 1}));   // coordinate sum 3 > n-1
  CHECK_FALSE(in_grid(s, {-1, 0}));  // negative coordinate
  CHECK_FALSE(in_grid(s, {3, 0}));
  CHECK_FALSE(in_grid(s, {0, 0, 0}));  // wrong width
  CHECK_FALSE(in_grid(s, {0}));
}

TEST_CASE("one-point grids") {
  for (int d = 1; d <= 6; ++d) {
    GridShape s(1, d);
    CHECK(point_count(s) == 1);
    CHECK(enumerate_points(s) == std::vector<GridPoint>{GridPoint(d, 0)});
  }
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(GridShape(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(GridShape(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(GridShape(-1, -1), std::invalid_argument);
  CHECK(GridShape() == GridShape(1, 1));
}
