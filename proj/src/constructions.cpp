#include "tricover/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tricover {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, rem = a % b;
  return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

// The two-argument mpq constructor keeps num/den as given; reduce explicitly so
// equal values always compare equal.
Rational frac(long long num, long long den) {
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

Hyperplane line2_x(int c) { return Hyperplane{{1, 0}, c}; }
Hyperplane line2_y(int c) { return Hyperplane{{0, 1}, c}; }
Hyperplane line2_diag(int s) { return Hyperplane{{1, 1}, s}; }

Hyperplane axis_plane(int d, int i, int c) {
  std::vector<long long> e(static_cast<size_t>(d), 0);
  e[static_cast<size_t>(i)] = 1;
  return Hyperplane{std::move(e), c};
}

Hyperplane diag_plane(int d, int s) {
  return Hyperplane{std::vector<long long>(static_cast<size_t>(d), 1), s};
}

// Residue decomposition used by all the d=2 formulas: n = 3j + r with r in
// {1,2,3} (so r = 3 stands for n divisible by 3).
std::pair<int, int> split_mod3(int n) {
  int r = n % 3 == 0 ? 3 : n % 3;
  return {(n - r) / 3, r};
}

}  // namespace

Rational f_star_closed_form_2d(int n) {
  if (n < 1) throw std::invalid_argument("f_star_closed_form_2d: n must be >= 1");
  auto [j, r] = split_mod3(n);
  switch (r) {
    case 1:
      return Rational(2 * j + 1);
    case 2:
      return Rational(2 * j + 1) + frac(2 * j + 1, 3 * j + 2);
    default:
      return Rational(2 * j + 2) + frac(j + 1, 3 * j + 4);
  }
}

FractionalCover fractional_cover_2d(int n) {
  if (n < 1) throw std::invalid_argument("fractional_cover_2d: n must be >= 1");
  FractionalCover cover{GridShape(n, 2), {}};
  if (n == 1) {
    cover.weights.push_back({line2_x(0), Rational(1)});
    return cover;
  }
  auto [j, r] = split_mod3(n);
  // Index range, weight numerator start and denominator per residue; in every
  // case line x=i, y=i and the diagonal x+y = (top-i) share weight (hi-i)/den.
  int count, hi, top, den;
  switch (r) {
    case 1:  // n = 3j+1, j >= 1 here since n > 1
      count = 2 * j, hi = 2 * j, top = 3 * j, den = 3 * j;
      break;
    case 2:  // n = 3j+2
      count = 2 * j + 1, hi = 2 * j + 1, top = 3 * j + 1, den = 3 * j + 2;
      break;
    default:  // n = 3j+3
      count = 2 * j + 2, hi = 2 * j + 2, top = 3 * j + 2, den = 3 * j + 4;
      break;
  }
  for (int i = 0; i < count; ++i) {
    Rational w = frac(hi - i, den);
    cover.weights.push_back({line2_x(i), w});
    cover.weights.push_back({line2_y(i), w});
    cover.weights.push_back({line2_diag(top - i), w});
  }
  canonicalize(cover);
  return cover;
}

MassCertificate mass_certificate_2d(int n) {
  if (n < 1) throw std::invalid_argument("mass_certificate_2d: n must be >= 1");
  MassCertificate cert{GridShape(n, 2), {}};
  if (n == 1) {
    cert.masses.push_back({{0, 0}, Rational(1)});
    return cert;
  }
  auto [j, r] = split_mod3(n);

  if (r == 2 && j == 0) {  // n = 2: every point carries 1/2
    for (const GridPoint& p : enumerate_points(cert.shape))
      cert.masses.push_back({p, frac(1, 2)});
    return cert;
  }
  if (r == 3 && j == 0) {  // n = 3: corners 1/4, the rest 1/2
    for (const GridPoint& p : enumerate_points(cert.shape)) {
      bool corner = (p[0] == 0 && p[1] == 0) || (p[0] == 2 && p[1] == 0) || (p[0] == 0 && p[1] == 2);
      cert.masses.push_back({p, corner ? frac(1, 4) : frac(1, 2)});
    }
    return cert;
  }

  // Hexagonal shells around the center. Shell index i is how far p sits outside
  // the core: the core (shell 0) is (j,j) for r=1, the three points next to the
  // center for r=2 and the six lattice points of the central triangle for r=3.
  // "gap" is the asymmetry of the shells: upper bounds sit gap steps further out.
  const int gap = r - 1;
  for (const GridPoint& p : enumerate_points(cert.shape)) {
    const int x = p[0], y = p[1], s = x + y;
    const int out[6] = {j - x,          x - j - gap,       j - y,
                        y - j - gap,    2 * j - s,         s - 2 * j - gap};
    int shell = out[0];
    for (int v : out) shell = std::max(shell, v);
    if (shell > j) continue;  // mass zero

    Rational mass;
    if (r == 1) {
      if (shell == 0) continue;  // the center carries no mass
      mass = frac(shell, j * (j + 1));
    } else {
      const int den = (j + 1) * (3 * j + 2 * gap);  // (j+1)(3j+2) or (j+1)(3j+4)
      if (shell == 0) {
        if (r == 2) {
          mass = frac(2, den);
        } else {
          // Corners of the central triangle touch two of its sides.
          int tight = 0;
          for (int v : out) tight += v == 0;
          mass = frac(tight >= 2 ? 4 : 2, den);
        }
      } else {
        // Short sides of shell i are x = j+i+gap, y = j+i+gap and x+y = 2j-i;
        // corner points (short meets long) use the short-side mass.
        bool short_side = (out[1] == shell) || (out[3] == shell) || (out[4] == shell);
        int num;
        if (short_side)
          num = shell == j ? (r == 2 ? 2 * j + 1 : j + 1) : 3 * shell + 2 * gap;
        else
          num = 3 * shell + gap;
        mass = frac(num, den);
      }
    }
    cert.masses.push_back({p, mass});
  }
  return cert;
}

IntegerCover kcover_2d(int n, int k) {
  if (n < 1) throw std::invalid_argument("kcover_2d: n must be >= 1");
  if (k < 1 || k > 4) throw std::invalid_argument("kcover_2d: k must be in 1..4");
  IntegerCover cover{GridShape(n, 2), k, {}};
  auto add = [&](const Hyperplane& h, int mult) { cover.multiplicities.push_back({h, mult}); };
  // Inclusive index ranges; floor_div keeps the small-n cases right where the
  // truncating '/' would round toward zero.
  auto add_xy = [&](long long lo, long long hi, int mult) {
    for (long long i = lo; i <= hi; ++i) {
      add(line2_x(static_cast<int>(i)), mult);
      add(line2_y(static_cast<int>(i)), mult);
    }
  };
  auto add_diag = [&](long long lo, long long hi, int mult) {
    for (long long i = lo; i <= hi; ++i) add(line2_diag(static_cast<int>(n - 1 - i)), mult);
  };
  switch (k) {
    case 1:
      for (int i = 0; i < n; ++i) add(line2_x(i), 1);
      break;
    case 2:
      if (n % 2 == 0) {
        add_xy(0, n / 2 - 1, 1);
        add_diag(0, n / 2 - 1, 1);
      } else {
        add_xy(0, (n - 1) / 2, 1);
        add_diag(0, (n - 3) / 2, 1);
      }
      break;
    case 3: {
      long long a = floor_div(n - 2, 4);
      add_xy(0, a, 2);
      add_xy(a + 1, floor_div(n - 1, 2), 1);
      add_diag(0, floor_div(n, 4) - 1, 2);
      add_diag(floor_div(n, 4), n % 4 == 1 ? floor_div(n, 2) : floor_div(n, 2) - 1, 1);
      break;
    }
    default: {  // k = 4
      long long a = floor_div(n - 1, 3);
      add_xy(0, a, 2);
      add_diag(0, a, 2);
      add_xy(a + 1, floor_div(2LL * n, 3) - 1, 1);
      add_diag(a + 1, floor_div(2LL * n, 3) - 1, 1);
      break;
    }
  }
  canonicalize(cover);
  return cover;
}

IntegerCover cover_k1_general(const GridShape& shape) {
  IntegerCover cover{shape, 1, {}};
  for (int c = 0; c < shape.n; ++c) cover.multiplicities.push_back({axis_plane(shape.d, 0, c), 1});
  canonicalize(cover);
  return cover;
}

IntegerCover cover_k2_general(const GridShape& shape) {
  const int n = shape.n, d = shape.d;
  const long long total = n + ceil_div(n, d);
  const long long q = total / (d + 1), r = total % (d + 1);
  IntegerCover cover{shape, 2, {}};
  for (int i = 0; i < d; ++i) {
    long long hi = i < r ? q : q - 1;  // first r directions get one extra offset
    for (long long c = 0; c <= hi; ++c)
      cover.multiplicities.push_back({axis_plane(d, i, static_cast<int>(c)), 1});
  }
  for (long long c = 0; c < q; ++c)
    cover.multiplicities.push_back({diag_plane(d, static_cast<int>(n - 1 - c)), 1});
  canonicalize(cover);
  return cover;
}

IntegerCover cover_k3_general(const GridShape& shape) {
  if (shape.d < 3) throw std::invalid_argument("cover_k3_general: requires d >= 3");
  const long long t = ceil_div(shape.n, shape.d - 1);
  IntegerCover cover{shape, 3, {}};
  for (long long c = 0; c < t; ++c) {
    for (int i = 0; i < shape.d; ++i)
      cover.multiplicities.push_back({axis_plane(shape.d, i, static_cast<int>(c)), 1});
    cover.multiplicities.push_back({diag_plane(shape.d, static_cast<int>(shape.n - 1 - c)), 1});
  }
  canonicalize(cover);
  return cover;
}

namespace {

// Shared case analysis for the block construction: number of blocks, the
// divisor M, and the multiplicity of block 1 (later blocks decrease by one).
struct BlockPlan {
  long long blocks;
  long long M;
  long long first_mult;
};

BlockPlan block_plan(int d, int k) {
  if (d < 1) throw std::invalid_argument("block construction: d must be >= 1");
  if (k < 1) throw std::invalid_argument("block construction: k must be >= 1");
  if (d % 2 == 1) {
    const long long h = (d + 1) / 2;
    const long long r = (k - 1) % h + 1, q = (k - r) / h;
    return {q + 1, h * (q + 2) - (r - 1), q + 1};
  }
  const long long r = (k - 1) % (d + 1) + 1, q = (k - r) / (d + 1);
  if (r <= d / 2 + 1) return {2 * q + 1, (d + 1) * (q + 1) - (r - 1), 2 * q + 1};
  return {2 * q + 2, (d + 1) * (q + 1) + (d + 2 - r), 2 * q + 2};
}

}  // namespace

bool block_cover_in_threshold(const GridShape& shape, int k) {
  BlockPlan plan = block_plan(shape.d, k);
  return plan.blocks * ceil_div(shape.n, plan.M) <= shape.n;
}

IntegerCover block_cover(const GridShape& shape, int k) {
  BlockPlan plan = block_plan(shape.d, k);
  const long long w = ceil_div(shape.n, plan.M);
  if (plan.blocks * w > shape.n)
    throw std::invalid_argument("block_cover: n too small for " +
                                std::to_string(plan.blocks) + " blocks of width " +
                                std::to_string(w));
  IntegerCover cover{shape, k, {}};
  for (long long j = 1; j <= plan.blocks; ++j) {
    const int mult = static_cast<int>(plan.first_mult + 1 - j);
    for (long long c = (j - 1) * w; c < j * w; ++c) {
      for (int i = 0; i < shape.d; ++i)
        cover.multiplicities.push_back({axis_plane(shape.d, i, static_cast<int>(c)), mult});
      cover.multiplicities.push_back(
          {diag_plane(shape.d, static_cast<int>(shape.n - 1 - c)), mult});
    }
  }
  canonicalize(cover);
  return cover;
}

namespace {

struct LiftPlan {
  long long N;  // number of blocks
  long long M;  // block-width divisor
  int j;
};

LiftPlan lift_plan(int k) {
  if (k < 2) throw std::invalid_argument("lifted_cover_2d: k must be >= 2");
  const int j = (k - 1) / 3;
  return {k - j - 1, 2LL * k - 3 * j - 2, j};
}

}  // namespace

bool lifted_cover_in_threshold(int n, int k) {
  LiftPlan plan = lift_plan(k);
  return plan.N * ceil_div(n, plan.M) <= n;
}

IntegerCover lifted_cover_2d(int n, int k) {
  if (n < 1) throw std::invalid_argument("lifted_cover_2d: n must be >= 1");
  LiftPlan plan = lift_plan(k);
  const long long w = ceil_div(n, plan.M);
  if (plan.N * w > n)
    throw std::invalid_argument("lifted_cover_2d: n too small for " +
                                std::to_string(plan.N) + " blocks of width " +
                                std::to_string(w));
  IntegerCover cover{GridShape(n, 2), k, {}};
  for (long long u = 1; u <= plan.N; ++u) {
    const int mult = static_cast<int>(k - plan.j - u);
    for (long long i = (u - 1) * w; i < u * w; ++i) {
      cover.multiplicities.push_back({line2_x(static_cast<int>(i)), mult});
      cover.multiplicities.push_back({line2_y(static_cast<int>(i)), mult});
      cover.multiplicities.push_back({line2_diag(static_cast<int>(n - 1 - i)), mult});
    }
  }
  canonicalize(cover);
  return cover;
}

Rational slope_constant(int d, int k) {
  if (d % 2 == 1) {
    const long long h = (d + 1) / 2;
    const long long r = (k - 1) % h + 1, q = (k - r) / h;
    const long long M = h * (q + 2) - (r - 1);
    return Rational(static_cast<long>(q + 1)) * (Rational(1) + frac(r - 1, M));
  }
  const long long r = (k - 1) % (d + 1) + 1, q = (k - r) / (d + 1);
  if (r <= d / 2 + 1) {
    const long long M = (d + 1) * (q + 1) - (r - 1);
    return Rational(static_cast<long>(2 * q + 1)) * (Rational(1) + frac(r - 1, M));
  }
  const long long M = (d + 1) * (q + 1) + (d + 2 - r);
  return Rational(static_cast<long>(2 * q + 3)) * (Rational(1) - frac(d + 2 - r, M));
}

FractionalCover simplex_fractional_cover(int d) {
  if (d < 1) throw std::invalid_argument("simplex_fractional_cover: d must be >= 1");
  FractionalCover cover{GridShape(2, d), {}};
  const Rational w(1, d);
  for (int i = 0; i < d; ++i) cover.weights.push_back({axis_plane(d, i, 0), w});
  cover.weights.push_back({diag_plane(d, 1), w});
  canonicalize(cover);
  return cover;
}

FractionalCover cover_333() {
  FractionalCover cover{GridShape(3, 3), {}};
  const Rational third(1, 3), sixth(1, 6);
  for (int i = 0; i < 3; ++i) cover.weights.push_back({axis_plane(3, i, 0), third});
  cover.weights.push_back({diag_plane(3, 2), third});
  cover.weights.push_back({Hyperplane{{1, 1, 0}, 1}, sixth});
  cover.weights.push_back({Hyperplane{{1, 0, 1}, 1}, sixth});
  cover.weights.push_back({Hyperplane{{0, 1, 1}, 1}, sixth});
  canonicalize(cover);
  return cover;
}

}  // namespace tricover
