#include "tricover/json_io.hpp"

#include <stdexcept>

#include "tricover/hyperplane.hpp"

namespace tricover {

namespace {

Json rational_field(const Rational& r, const JsonOptions& opt) {
  return opt.decimal ? rational_to_decimal(r, opt.decimal_digits) : rational_to_string(r);
}

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

long long int_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(where) + ": field '" + key + "' must be an integer");
  return v.get<long long>();
}

Rational rational_field_in(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_string())
    throw std::invalid_argument(std::string(where) + ": field '" + key +
                                "' must be a rational string");
  return rational_from_string(v.get<std::string>());
}

GridPoint point_from_json(const Json& j, const GridShape& shape, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != shape.d)
    throw std::invalid_argument(std::string(where) + ": point must be an array of d integers");
  GridPoint p;
  for (const auto& c : j) {
    if (!c.is_number_integer())
      throw std::invalid_argument(std::string(where) + ": point coordinates must be integers");
    p.push_back(c.get<int>());
  }
  if (!in_grid(shape, p))
    throw std::invalid_argument(std::string(where) + ": point outside the grid");
  return p;
}

}  // namespace

Json to_json(const GridShape& shape, const JsonOptions&) {
  Json j;
  j["n"] = shape.n;
  j["d"] = shape.d;
  return j;
}

Json to_json(const Hyperplane& h, const JsonOptions&) {
  Json j;
  j["coeffs"] = h.coeffs;
  j["offset"] = h.offset;
  return j;
}

Json to_json(const FractionalCover& cover, const JsonOptions& opt) {
  Json j;
  j["shape"] = to_json(cover.shape, opt);
  j["weights"] = Json::array();
  for (const auto& e : cover.weights) {
    Json w;
    w["hyperplane"] = to_json(e.hyperplane, opt);
    w["weight"] = rational_field(e.weight, opt);
    j["weights"].push_back(std::move(w));
  }
  return j;
}

Json to_json(const IntegerCover& cover, const JsonOptions& opt) {
  Json j;
  j["shape"] = to_json(cover.shape, opt);
  j["k"] = cover.k;
  j["multiplicities"] = Json::array();
  for (const auto& e : cover.multiplicities) {
    Json w;
    w["hyperplane"] = to_json(e.hyperplane, opt);
    w["multiplicity"] = e.multiplicity;
    j["multiplicities"].push_back(std::move(w));
  }
  return j;
}

Json to_json(const MassCertificate& cert, const JsonOptions& opt) {
  Json j;
  j["shape"] = to_json(cert.shape, opt);
  j["masses"] = Json::array();
  for (const auto& e : cert.masses) {
    Json w;
    w["point"] = e.point;
    w["mass"] = rational_field(e.mass, opt);
    j["masses"].push_back(std::move(w));
  }
  return j;
}

Json to_json(const LPSolution& sol, const JsonOptions& opt) {
  Json j;
  j["status"] = sol.status == SolveStatus::Optimal ? "optimal" : "infeasible";
  j["optimum"] = rational_field(sol.optimum, opt);
  j["primal"] = to_json(sol.primal, opt);
  j["dual"] = to_json(sol.dual, opt);
  return j;
}

Json to_json(const SearchResult& result, const JsonOptions& opt) {
  Json j;
  j["optimum"] = result.optimum;
  j["proven"] = result.proven;
  j["nodes"] = result.nodes_explored;
  j["cover"] = to_json(result.cover, opt);
  return j;
}

Json to_json(const VerificationReport& report, const JsonOptions& opt) {
  Json j;
  j["valid"] = report.valid;
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    Json w;
    w["point"] = v.point;
    w["achieved"] = rational_field(v.achieved, opt);
    w["required"] = rational_field(v.required, opt);
    j["violations"].push_back(std::move(w));
  }
  if (report.bound) j["bound"] = rational_field(*report.bound, opt);
  if (report.worst_hyperplane_mass)
    j["worst_hyperplane_mass"] = rational_field(*report.worst_hyperplane_mass, opt);
  if (report.worst_hyperplane) j["worst_hyperplane"] = to_json(*report.worst_hyperplane, opt);
  return j;
}

GridShape shape_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("shape: expected an object");
  return GridShape(static_cast<int>(int_field(j, "n", "shape")),
                   static_cast<int>(int_field(j, "d", "shape")));
}

Hyperplane hyperplane_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("hyperplane: expected an object");
  const Json& coeffs = field(j, "coeffs", "hyperplane");
  if (!coeffs.is_array() || coeffs.empty())
    throw std::invalid_argument("hyperplane: 'coeffs' must be a nonempty array");
  Hyperplane h;
  for (const auto& c : coeffs) {
    if (!c.is_number_integer())
      throw std::invalid_argument("hyperplane: coefficients must be integers");
    h.coeffs.push_back(c.get<long long>());
  }
  h.offset = int_field(j, "offset", "hyperplane");
  if (normalize_hyperplane(h.coeffs, h.offset) != h)
    throw std::invalid_argument("hyperplane: not in canonical form");
  return h;
}

FractionalCover fractional_cover_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("fractional cover: expected an object");
  FractionalCover cover;
  cover.shape = shape_from_json(field(j, "shape", "fractional cover"));
  const Json& weights = field(j, "weights", "fractional cover");
  if (!weights.is_array())
    throw std::invalid_argument("fractional cover: 'weights' must be an array");
  for (const auto& w : weights) {
    Hyperplane h = hyperplane_from_json(field(w, "hyperplane", "fractional cover entry"));
    if (static_cast<int>(h.coeffs.size()) != cover.shape.d)
      throw std::invalid_argument("fractional cover: hyperplane width mismatch");
    cover.weights.push_back({std::move(h), rational_field_in(w, "weight", "fractional cover entry")});
  }
  canonicalize(cover);
  return cover;
}

IntegerCover integer_cover_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("integer cover: expected an object");
  IntegerCover cover;
  cover.shape = shape_from_json(field(j, "shape", "integer cover"));
  long long k = int_field(j, "k", "integer cover");
  if (k < 1) throw std::invalid_argument("integer cover: k must be >= 1");
  cover.k = static_cast<int>(k);
  const Json& mults = field(j, "multiplicities", "integer cover");
  if (!mults.is_array())
    throw std::invalid_argument("integer cover: 'multiplicities' must be an array");
  for (const auto& w : mults) {
    Hyperplane h = hyperplane_from_json(field(w, "hyperplane", "integer cover entry"));
    if (static_cast<int>(h.coeffs.size()) != cover.shape.d)
      throw std::invalid_argument("integer cover: hyperplane width mismatch");
    long long mult = int_field(w, "multiplicity", "integer cover entry");
    if (mult < 1 || mult > 1'000'000'000)
      throw std::invalid_argument("integer cover: multiplicity out of range");
    cover.multiplicities.push_back({std::move(h), static_cast<int>(mult)});
  }
  canonicalize(cover);
  return cover;
}

MassCertificate mass_certificate_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("mass certificate: expected an object");
  MassCertificate cert;
  cert.shape = shape_from_json(field(j, "shape", "mass certificate"));
  const Json& masses = field(j, "masses", "mass certificate");
  if (!masses.is_array())
    throw std::invalid_argument("mass certificate: 'masses' must be an array");
  for (const auto& w : masses) {
    cert.masses.push_back(
        {point_from_json(field(w, "point", "mass certificate entry"), cert.shape,
                         "mass certificate entry"),
         rational_field_in(w, "mass", "mass certificate entry")});
  }
  canonicalize(cert);
  return cert;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tricover
