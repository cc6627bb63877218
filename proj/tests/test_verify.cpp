#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tricover/constructions.hpp"
#include "tricover/lp.hpp"
#include "tricover/verify.hpp"

using namespace tricover;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

// Direct incidence count, independent of the verifier's fast paths.
long long slow_coverage(const IntegerCover& cover, const GridPoint& p) {
  long long c = 0;
  for (const auto& [h, m] : cover.multiplicities)
    if (incident(h, p)) c += m;
  return c;
}

}  // namespace

TEST_CASE("integer cover verification: demand met and unmet") {
  auto c3 = kcover_2d(7, 3);
  CHECK(verify_cover(c3, 3).valid);
  auto r4 = verify_cover(c3, 4);
  CHECK_FALSE(r4.valid);
  CHECK_FALSE(r4.violations.empty());
  for (const auto& v : r4.violations) {
    CHECK(v.required == Rational(4));
    CHECK(v.achieved < v.required);
    CHECK(Rational(static_cast<long>(slow_coverage(c3, v.point))) == v.achieved);
  }
}

TEST_CASE("zero demand is vacuously satisfied") {
  IntegerCover empty;
  empty.shape = GridShape(4, 2);
  empty.k = 0;
  CHECK(verify_cover(empty, 0).valid);
  CHECK(verify_cover(kcover_2d(3, 1), 0).valid);
}

TEST_CASE("structurally broken covers are rejected outright") {
  IntegerCover bad = kcover_2d(3, 1);
  bad.multiplicities[0].multiplicity = 0;
  CHECK_THROWS_AS(verify_cover(bad, 1), std::invalid_argument);
  IntegerCover wide = kcover_2d(3, 1);
  wide.multiplicities[0].hyperplane.coeffs.push_back(1);
  CHECK_THROWS_AS(verify_cover(wide, 1), std::invalid_argument);
}

TEST_CASE("large all-standard covers take the counting path and agree with direct incidence") {
  GridShape s(85, 3);
  REQUIRE(point_count(s) > 100'000);
  auto cover = block_cover(s, 2);
  auto rep = verify_cover(cover, 2);
  CHECK(rep.valid);

  // strip one direction's worth of planes: deficiency must be caught and witnessed
  IntegerCover torn = cover;
  torn.multiplicities.erase(
      std::remove_if(torn.multiplicities.begin(), torn.multiplicities.end(),
                     [](const auto& e) { return e.hyperplane.coeffs == std::vector<long long>{1, 0, 0}; }),
      torn.multiplicities.end());
  auto bad = verify_cover(torn, 2);
  CHECK_FALSE(bad.valid);
  REQUIRE_FALSE(bad.violations.empty());
  for (size_t i = 0; i < std::min<size_t>(bad.violations.size(), 5); ++i) {
    const auto& v = bad.violations[i];
    CHECK(Rational(static_cast<long>(slow_coverage(torn, v.point))) == v.achieved);
    CHECK(v.achieved < Rational(2));
  }
}

TEST_CASE("fractional covers: known-good families pass, tampering fails") {
  CHECK(verify_fractional_cover(fractional_cover_2d(10)).valid);
  CHECK(verify_fractional_cover(cover_333()).valid);
  CHECK(verify_fractional_cover(simplex_fractional_cover(4)).valid);

  auto fc = fractional_cover_2d(4);
  fc.weights[0].weight /= 2;  // the y = 0 line is exactly tight
  auto rep = verify_fractional_cover(fc);
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.violations.empty());
  for (const auto& v : rep.violations) CHECK(v.achieved < Rational(1));
}

TEST_CASE("mass certificates: bounds match the LP optimum") {
  auto m10 = verify_mass_certificate(mass_certificate_2d(10));
  CHECK(m10.valid);
  CHECK(m10.bound == Rational(7));
  auto m11 = verify_mass_certificate(mass_certificate_2d(11));
  CHECK(m11.valid);
  CHECK(m11.bound == frac(84, 11));
  for (int n = 1; n <= 6; ++n) {
    auto rep = verify_mass_certificate(mass_certificate_2d(n));
    CHECK(rep.valid);
    CHECK(rep.bound == f_star(GridShape(n, 2)).optimum);
  }
}

TEST_CASE("uniform masses on the two-layer simplex certify 1 + 1/d") {
  for (int d = 1; d <= 5; ++d) {
    MassCertificate cert;
    cert.shape = GridShape(2, d);
    for (const auto& p : enumerate_points(cert.shape))
      cert.masses.push_back({p, frac(1, d)});
    auto rep = verify_mass_certificate(cert);
    CHECK(rep.valid);
    CHECK(rep.bound == Rational(1) + frac(1, d));
  }
}

TEST_CASE("overloaded mass certificates name the worst hyperplane") {
  auto cert = mass_certificate_2d(5);
  cert.masses[0].mass += frac(1, 2);  // corner sits on tight lines
  auto rep = verify_mass_certificate(cert);
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.worst_hyperplane.has_value());
  CHECK(rep.worst_hyperplane_mass > Rational(1));
  // the named hyperplane really carries that load
  Rational load = 0;
  for (const auto& [p, m] : cert.masses)
    if (incident(*rep.worst_hyperplane, p)) load += m;
  CHECK(load == rep.worst_hyperplane_mass);
}

TEST_CASE("mass certificate structural errors") {
  MassCertificate bad;
  bad.shape = GridShape(3, 2);
  bad.masses.push_back({GridPoint{5, 5}, Rational(1)});  // outside the grid
  CHECK_THROWS_AS(verify_mass_certificate(bad), std::invalid_argument);
  MassCertificate neg;
  neg.shape = GridShape(3, 2);
  neg.masses.push_back({GridPoint{0, 0}, Rational(-1)});
  CHECK_THROWS_AS(verify_mass_certificate(neg), std::invalid_argument);
}

TEST_CASE("2d certificates: pair-line oracle agrees with the reported worst load") {
  for (int n = 2; n <= 8; ++n) {
    auto cert = mass_certificate_2d(n);
    auto rep = verify_mass_certificate(cert);

    // oracle: maximum load over all lines through >= 2 support points, plus singles
    auto pts = enumerate_points(cert.shape);
    std::map<GridPoint, Rational> mass;
    for (const auto& [p, m] : cert.masses) mass[p] += m;
    Rational worst = 0;
    for (const auto& [p, m] : mass) worst = std::max(worst, m);
    for (size_t i = 0; i < cert.masses.size(); ++i)
      for (size_t j = i + 1; j < cert.masses.size(); ++j) {
        const auto& a = cert.masses[i].point;
        const auto& b = cert.masses[j].point;
        if (a == b) continue;
        long long dx = b[0] - a[0], dy = b[1] - a[1];
        Hyperplane line = normalize_hyperplane({dy, -dx}, dy * a[0] - dx * a[1]);
        Rational load = 0;
        for (const auto& [p, m] : mass)
          if (incident(line, p)) load += m;
        worst = std::max(worst, load);
      }
    CHECK(rep.worst_hyperplane_mass == worst);
    CHECK(rep.valid == (worst <= Rational(1)));
  }
}

TEST_CASE("weak duality holds between produced covers and certificates") {
  for (int n = 1; n <= 12; ++n) {
    auto cover = fractional_cover_2d(n);
    auto cert = mass_certificate_2d(n);
    CHECK(cert.total_mass() <= cover.total_weight());
    CHECK(cert.total_mass() == cover.total_weight());  // both are optimal here
  }
}

TEST_CASE("duality sweep rows carry exact residuals") {
  auto rows = check_duality_conjecture(2, 2, 5);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.proven);
    CHECK(row.slope == frac(3, 2));
    CHECK(row.residual == Rational(row.value) - row.slope * row.n);
  }
  CHECK(rows[0].residual == Rational(0));   // n=2: 3 - 3
  CHECK(rows[1].residual == frac(1, 2));    // n=3: 5 - 9/2
  CHECK(rows[2].residual == Rational(0));   // n=4: 6 - 6
  CHECK(rows[3].residual == frac(1, 2));    // n=5: 12/2 ... 8 - 15/2

  auto k4 = check_duality_conjecture(4, 4, 4);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].value == 12);
  CHECK(k4[0].residual == Rational(0));
}

TEST_CASE("d=3 sweep rows match the small-k formulas") {
  auto k2 = check_d3_conjecture(2, 2, 4);
  REQUIRE(k2.size() == 3);
  for (const auto& row : k2) {
    CHECK(row.d == 3);
    CHECK(row.value == row.n + (row.n + 2) / 3);
    CHECK(row.proven);
  }
  auto k3 = check_d3_conjecture(3, 2, 3);
  for (const auto& row : k3) CHECK(row.slope == Rational(2));
  auto k4 = check_d3_conjecture(4, 2, 2);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].slope == frac(12, 5));
}

TEST_CASE("sweep CSV is byte-stable") {
  auto rows = check_duality_conjecture(2, 2, 3);
  CHECK(conjecture_csv(rows) ==
        "n,d,k,value,proven,slope,residual\n"
        "2,2,2,3,1,3/2,0\n"
        "3,2,2,5,1,3/2,1/2\n");
}
