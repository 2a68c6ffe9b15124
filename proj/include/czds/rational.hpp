#ifndef CZDS_RATIONAL_HPP
#define CZDS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace czds {

// Exact arbitrary-precision rational scalar. Canonical form: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1. GMP keeps values canonical as long as every entry
// point canonicalizes, so construction goes through the helpers below.
using Rational = mpq_class;

inline Rational ratio(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Sign as -1, 0, or 1.
inline int sign_of(const Rational& r) { return sgn(r); }

}  // namespace czds

#endif
