#include "tricover/grid.hpp"

#include <numeric>
#include <stdexcept>

#include "tricover/rational.hpp"

namespace tricover {

GridShape::GridShape(int n_, int d_) : n(n_), d(d_) {
  if (n < 1) throw std::invalid_argument("GridShape: n must be >= 1");
  if (d < 1) throw std::invalid_argument("GridShape: d must be >= 1");
}

std::vector<GridPoint> enumerate_points(const GridShape& shape) {
  std::vector<GridPoint> points;
  GridPoint p(static_cast<size_t>(shape.d), 0);
  // Depth-first with ascending coordinates emits lex order directly.
  auto rec = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == shape.d) {
      points.push_back(p);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      p[static_cast<size_t>(axis)] = v;
      self(self, axis + 1, remaining - v);
    }
    p[static_cast<size_t>(axis)] = 0;
  };
  rec(rec, 0, shape.n - 1);
  return points;
}

std::uint64_t point_count(const GridShape& shape) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(shape.n - 1 + shape.d),
               static_cast<unsigned long>(shape.d));
  if (!c.fits_ulong_p()) throw std::overflow_error("point_count: grid too large");
  return c.get_ui();
}

bool in_grid(const GridShape& shape, const GridPoint& p) {
  if (p.size() != static_cast<size_t>(shape.d)) return false;
  long sum = 0;
  for (int v : p) {
    if (v < 0) return false;
    sum += v;
  }
  return sum <= shape.n - 1;
}

}  // namespace tricover
