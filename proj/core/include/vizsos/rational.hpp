#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "vizsos/errors.hpp"

namespace vizsos {

// Exact arithmetic lives on GMP rationals; no floating point on exact paths.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" or "num"; used by the JSON codecs and the CLI expression parser.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

Integer binomial(const Integer& n, unsigned long k);
Integer factorial(unsigned long n);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace vizsos
