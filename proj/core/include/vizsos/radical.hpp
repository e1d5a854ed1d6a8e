#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "vizsos/rational.hpp"

namespace vizsos {

// Element of the ring of rational linear combinations of sqrt(m) for
// squarefree m >= 1. Radicand 1 is the rational part. The span is closed
// under ring operations since sqrt(a)*sqrt(b) = g*sqrt(ab/g^2), g = gcd(a,b),
// and every value is kept canonical: squarefree keys only, no zero
// coefficients, zero == empty map.
class RadicalScalar {
 public:
  RadicalScalar() = default;
  RadicalScalar(const Rational& q);  // NOLINT: implicit by design
  RadicalScalar(long n) : RadicalScalar(Rational(n)) {}
  RadicalScalar(int n) : RadicalScalar(Rational(n)) {}

  // coefficient * sqrt(radicand); the radicand need not be squarefree,
  // square factors are extracted.
  static RadicalScalar sqrt_term(const Rational& coefficient, long radicand);

  // Exact sqrt(p/q) for p/q >= 0, canonicalised so the radicand is
  // squarefree. Negative input is a domain error.
  static RadicalScalar sqrt_of_rational(const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // The coefficient of sqrt(1); zero if absent.
  Rational rational_part() const;
  // Throws unless the value is purely rational.
  Rational as_rational() const;
  Rational coefficient(long radicand) const;

  const std::map<long, Rational>& terms() const { return terms_; }

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& other);
  RadicalScalar& operator-=(const RadicalScalar& other);
  RadicalScalar& operator*=(const RadicalScalar& other);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) {
    a += b;
    return a;
  }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) {
    a -= b;
    return a;
  }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) {
    a *= b;
    return a;
  }

  bool operator==(const RadicalScalar& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const RadicalScalar& other) const {
    return !(*this == other);
  }

  // Multiplicative inverse inside the span (exists: the span is the union of
  // the multiquadratic fields). Rationalises one prime at a time.
  RadicalScalar inverse() const;

  // Galois-style conjugation: flips the sign of every term whose radicand is
  // divisible by the given prime. Maps solutions of rational systems to
  // solutions.
  RadicalScalar conjugate(long prime) const;

  double to_double() const;
  std::string to_string() const;

 private:
  void insert_term(long radicand, const Rational& coeff);

  std::map<long, Rational> terms_;
};

inline RadicalScalar operator*(const Rational& q, RadicalScalar a) {
  a *= RadicalScalar(q);
  return a;
}

// radical_mul of the module surface; member operator* does the work.
inline RadicalScalar radical_mul(const RadicalScalar& a,
                                 const RadicalScalar& b) {
  return a * b;
}

// n = s^2 * m with m squarefree; returns {s, m}. n >= 1.
std::pair<Integer, Integer> extract_square_part(const Integer& n);

}  // namespace vizsos
