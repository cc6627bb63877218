#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tricover/cover.hpp"
#include "tricover/lp.hpp"
#include "tricover/search.hpp"
#include "tricover/verify.hpp"

namespace tricover {

// Serialization options. Exact mode emits rationals as canonical "p/q" strings
// and round-trips; decimal mode is a human-readable approximation and is
// deliberately not accepted by the parsers.
struct JsonOptions {
  bool decimal = false;
  int decimal_digits = 12;
};

using Json = nlohmann::ordered_json;

Json to_json(const GridShape& shape, const JsonOptions& = {});
Json to_json(const Hyperplane& h, const JsonOptions& = {});
Json to_json(const FractionalCover& cover, const JsonOptions& = {});
Json to_json(const IntegerCover& cover, const JsonOptions& = {});
Json to_json(const MassCertificate& cert, const JsonOptions& = {});
Json to_json(const LPSolution& sol, const JsonOptions& = {});
Json to_json(const SearchResult& result, const JsonOptions& = {});
Json to_json(const VerificationReport& report, const JsonOptions& = {});

// Parsers validate shape, canonical hyperplane form, rational syntax and entry
// invariants; they throw std::invalid_argument with a field-specific message.
GridShape shape_from_json(const Json& j);
Hyperplane hyperplane_from_json(const Json& j);
FractionalCover fractional_cover_from_json(const Json& j);
IntegerCover integer_cover_from_json(const Json& j);
MassCertificate mass_certificate_from_json(const Json& j);

// Serialize with a stable layout (2-space indent, '\n' at end) so identical data
// produces identical bytes.
std::string to_text(const Json& j);

}  // namespace tricover
