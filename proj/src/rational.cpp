#include "tricover/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tricover {

std::string rational_to_string(const Rational& r) {
  return r.get_str();  // mpq prints "p" or "p/q" in canonical form
}

std::string rational_to_decimal(const Rational& r, int digits) {
  // Round-half-away from zero at the requested number of fractional digits,
  // then trim trailing zeros. Exact integer arithmetic throughout.
  bool negative = sgn(r) < 0;
  Rational a = abs(r);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled_num = a.get_num() * scale * 2 + a.get_den();
  Integer units = scaled_num / (a.get_den() * 2);  // floor(a*scale + 1/2)
  Integer whole = units / scale;
  Integer frac = units % scale;
  std::ostringstream out;
  if (negative && (whole != 0 || frac != 0)) out << '-';
  out << whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(0, static_cast<size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out << '.' << f;
  }
  return out.str();
}

Rational rational_from_string(const std::string& text) {
  // mpq_set_str accepts whitespace and odd forms; insist on a strict
  // [-]digits[/digits] shape first so malformed input fails loudly.
  auto fail = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
  if (text.empty()) fail();
  size_t i = text[0] == '-' ? 1 : 0;
  if (i >= text.size()) fail();
  bool seen_slash = false;
  for (size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (seen_slash || j == i || j + 1 == text.size()) fail();
      seen_slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      fail();
    }
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) fail();
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) fail();  // "p/0"
  r.canonicalize();
  return r;
}

long ceil_to_long(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("ceil_to_long: value out of range");
  return q.get_si();
}

}  // namespace tricover
