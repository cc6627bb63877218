#pragma once

#include <vector>

#include "tricover/grid.hpp"
#include "tricover/hyperplane.hpp"
#include "tricover/rational.hpp"

namespace tricover {

// Weighted hyperplane set. Entries are kept sorted by hyperplane, weights are
// strictly positive (zero-weight columns are dropped on construction/parse).
struct FractionalCover {
  GridShape shape;
  struct Entry {
    Hyperplane hyperplane;
    Rational weight;
  };
  std::vector<Entry> weights;

  Rational total_weight() const;
};

// Multiset of hyperplanes intended to cover every grid point at least k times.
struct IntegerCover {
  GridShape shape;
  int k = 1;
  struct Entry {
    Hyperplane hyperplane;
    int multiplicity;  // >= 1
  };
  std::vector<Entry> multiplicities;

  long cardinality() const;  // sum of multiplicities
};

// Nonnegative point masses; a witness that no hyperplane can collect more than
// total mass 1, making the total a lower bound for fractional covers.
struct MassCertificate {
  GridShape shape;
  struct Entry {
    GridPoint point;
    Rational mass;
  };
  std::vector<Entry> masses;  // sorted by point, masses > 0

  Rational total_mass() const;
};

// Sort entries canonically, merge duplicates, drop zeros; throws
// std::invalid_argument on negative weights/masses or multiplicity < 1.
void canonicalize(FractionalCover& cover);
void canonicalize(IntegerCover& cover);
void canonicalize(MassCertificate& cert);

}  // namespace tricover
