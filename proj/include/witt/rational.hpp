#pragma once

#include <gmpxx.h>

#include <string>

#include "witt/errors.hpp"

namespace witt {

// Exact arbitrary-precision rational. GMP's expression templates mean
// compound expressions must be materialized into Rational before member
// calls; helpers below always hand back a canonicalized value.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// accepts "3", "-3", "3/4"; mpq_class's string ctor does NOT canonicalize
inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw Error("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) {
  Rational r = abs(q);
  return r;
}

// gcd of numerators over lcm of denominators; gcd(0,x) = |x|
inline Rational rat_gcd(const Rational& a, const Rational& b) {
  mpz_class gn, ld;
  mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational r(gn, ld);
  r.canonicalize();
  return r;
}

}  // namespace witt
