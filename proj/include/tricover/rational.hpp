#pragma once

#include <gmpxx.h>

#include <string>

namespace tricover {

// All weights, masses and LP values are exact rationals. mpq_class keeps values
// canonical (reduced, positive denominator) through arithmetic, which is what the
// serialized "p/q" form relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text form: "p/q" with gcd(p,q)=1 and q>0, plain "p" when q=1.
std::string rational_to_string(const Rational& r);

// Decimal rendering for human consumption only; never parsed back.
std::string rational_to_decimal(const Rational& r, int digits = 12);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// (including q=0), and canonicalizes the result.
Rational rational_from_string(const std::string& text);

// Smallest integer >= r, as a plain long (desk-scale values only).
long ceil_to_long(const Rational& r);

}  // namespace tricover
