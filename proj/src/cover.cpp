#include "tricover/cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tricover {

Rational FractionalCover::total_weight() const {
  Rational t = 0;
  for (const auto& e : weights) t += e.weight;
  return t;
}

long IntegerCover::cardinality() const {
  long t = 0;
  for (const auto& e : multiplicities) t += e.multiplicity;
  return t;
}

Rational MassCertificate::total_mass() const {
  Rational t = 0;
  for (const auto& e : masses) t += e.mass;
  return t;
}

void canonicalize(FractionalCover& cover) {
  std::map<Hyperplane, Rational> merged;
  for (auto& e : cover.weights) {
    if (e.hyperplane.coeffs.size() != static_cast<size_t>(cover.shape.d))
      throw std::invalid_argument("fractional cover: hyperplane dimension mismatch");
    if (sgn(e.weight) < 0) throw std::invalid_argument("fractional cover: negative weight");
    if (sgn(e.weight) > 0) merged[e.hyperplane] += e.weight;
  }
  cover.weights.clear();
  for (auto& [h, w] : merged) cover.weights.push_back({h, w});
}

void canonicalize(IntegerCover& cover) {
  std::map<Hyperplane, long> merged;
  for (auto& e : cover.multiplicities) {
    if (e.hyperplane.coeffs.size() != static_cast<size_t>(cover.shape.d))
      throw std::invalid_argument("integer cover: hyperplane dimension mismatch");
    if (e.multiplicity < 1) throw std::invalid_argument("integer cover: multiplicity < 1");
    merged[e.hyperplane] += e.multiplicity;
  }
  cover.multiplicities.clear();
  for (auto& [h, m] : merged) cover.multiplicities.push_back({h, static_cast<int>(m)});
}

void canonicalize(MassCertificate& cert) {
  std::map<GridPoint, Rational> merged;
  for (auto& e : cert.masses) {
    if (!in_grid(cert.shape, e.point))
      throw std::invalid_argument("mass certificate: point outside grid");
    if (sgn(e.mass) < 0) throw std::invalid_argument("mass certificate: negative mass");
    if (sgn(e.mass) > 0) merged[e.point] += e.mass;
  }
  cert.masses.clear();
  for (auto& [p, m] : merged) cert.masses.push_back({p, m});
}

}  // namespace tricover
