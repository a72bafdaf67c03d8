#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace azw {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms; integers print without a denominator ("3", "-1").
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// p/q reduced. The two-argument mpq_class constructor does not reduce, and
/// unreduced values compare unequal.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace azw
