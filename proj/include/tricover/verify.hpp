#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tricover/cover.hpp"
#include "tricover/grid.hpp"
#include "tricover/rational.hpp"
#include "tricover/search.hpp"

namespace tricover {

struct Violation {
  GridPoint point;
  Rational achieved;
  Rational required;
};

struct VerificationReport {
  bool valid = false;
  // For covers: failing points with achieved coverage. Small instances list every
  // failing point; the fast path for all-standard covers on huge grids reports one
  // witness per deficient diagonal level instead of materializing them all.
  std::vector<Violation> violations;
  // For mass certificates: the certified lower bound (total mass) when valid, and
  // the heaviest spanned hyperplane either way.
  std::optional<Rational> bound;
  std::optional<Rational> worst_hyperplane_mass;
  std::optional<Hyperplane> worst_hyperplane;
};

// Does every grid point lie on at least k hyperplanes of the multiset?
// Hyperplanes need not be candidates; incidence is checked directly.
VerificationReport verify_cover(const IntegerCover& cover, int k);

// Does every grid point collect total weight >= 1?
VerificationReport verify_fractional_cover(const FractionalCover& cover);

// Valid iff no single point carries mass > 1 and every hyperplane spanned by
// d affinely independent grid points collects mass <= 1; any other hyperplane
// meets the support in fewer points, so these checks bound them all. When valid,
// total mass is reported as a certified lower bound on f*(shape).
VerificationReport verify_mass_certificate(const MassCertificate& cert);

// One solved instance of f(n, d, k) against the conjectured slope.
// residual = value - slope*n, exact.
struct ConjectureRow {
  int n = 0, d = 0, k = 0;
  long value = 0;
  bool proven = false;
  Rational slope;
  Rational residual;
};

// d=2 rows for n in [n_min, n_max] against slope f*(k,2). Asserts only what is
// proven: k*f*(n,2) <= value <= k*n on proven rows. Unproven rows (budget) are
// flagged, never asserted on.
std::vector<ConjectureRow> check_duality_conjecture(int k, int n_min, int n_max,
                                                    const SearchConfig& config = {});

// d=3 rows against slope (k+1)/2 for odd k, k(k+2)/(2(k+1)) for even k.
std::vector<ConjectureRow> check_d3_conjecture(int k, int n_min, int n_max,
                                               const SearchConfig& config = {});

// CSV with header "n,d,k,value,proven,slope,residual"; rationals as p/q,
// proven as 1/0. Byte-deterministic.
std::string conjecture_csv(const std::vector<ConjectureRow>& rows);

}  // namespace tricover
