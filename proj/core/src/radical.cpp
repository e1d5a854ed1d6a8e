#include "vizsos/radical.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace vizsos {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw ValidationError("cannot parse rational: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Integer binomial(const Integer& n, unsigned long k) {
  // Falling factorial over k!; exact for negative n as well (generalised
  // binomial is not needed here, n >= 0 in all call sites).
  Integer num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= n - static_cast<long>(i);
  return num / factorial(k);
}

Integer factorial(unsigned long n) {
  Integer f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

std::pair<Integer, Integer> extract_square_part(const Integer& n) {
  if (n < 1) throw ValidationError("extract_square_part needs n >= 1");
  Integer square_root = 1;
  Integer squarefree = 1;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    for (int i = 0; i < mult / 2; ++i) square_root *= p;
    if (mult % 2 == 1) squarefree *= p;
  }
  squarefree *= rest;
  return {square_root, squarefree};
}

RadicalScalar::RadicalScalar(const Rational& q) {
  if (q != 0) terms_[1] = q;
}

void RadicalScalar::insert_term(long radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalScalar RadicalScalar::sqrt_term(const Rational& coefficient,
                                       long radicand) {
  if (radicand < 1) throw ValidationError("radicand must be >= 1");
  auto [s, m] = extract_square_part(Integer(radicand));
  RadicalScalar r;
  r.insert_term(m.get_si(), coefficient * Rational(s));
  return r;
}

RadicalScalar RadicalScalar::sqrt_of_rational(const Rational& value) {
  if (value < 0)
    throw ValidationError("sqrt of negative rational is outside the ring");
  if (value == 0) return RadicalScalar();
  // sqrt(p/q) = sqrt(p*q)/q.
  Integer p = value.get_num();
  Integer q = value.get_den();
  auto [s, m] = extract_square_part(p * q);
  RadicalScalar r;
  r.insert_term(m.get_si(), Rational(s) / Rational(q));
  return r;
}

bool RadicalScalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rational RadicalScalar::rational_part() const { return coefficient(1); }

Rational RadicalScalar::as_rational() const {
  if (!is_rational())
    throw StructuralError("RadicalScalar is not rational: " + to_string());
  return rational_part();
}

Rational RadicalScalar::coefficient(long radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rational(0) : it->second;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar r;
  for (const auto& [m, q] : terms_) r.terms_[m] = -q;
  return r;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& other) {
  for (const auto& [m, q] : other.terms_) insert_term(m, q);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& other) {
  for (const auto& [m, q] : other.terms_) insert_term(m, -q);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& other) {
  RadicalScalar result;
  for (const auto& [m1, q1] : terms_) {
    for (const auto& [m2, q2] : other.terms_) {
      if (m1 == m2) {
        result.insert_term(1, q1 * q2 * Rational(m1));
        continue;
      }
      // sqrt(a)*sqrt(b) = g*sqrt(ab/g^2) with g = gcd(a,b).
      Integer g;
      mpz_gcd(g.get_mpz_t(), Integer(m1).get_mpz_t(), Integer(m2).get_mpz_t());
      Integer rad = (Integer(m1) / g) * (Integer(m2) / g);
      result.insert_term(rad.get_si(), q1 * q2 * Rational(g));
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

RadicalScalar RadicalScalar::conjugate(long prime) const {
  RadicalScalar r;
  for (const auto& [m, q] : terms_) r.terms_[m] = (m % prime == 0) ? -q : q;
  return r;
}

RadicalScalar RadicalScalar::inverse() const {
  if (terms_.empty()) throw ValidationError("inverse of zero");
  if (is_rational()) {
    RadicalScalar r;
    r.terms_[1] = 1 / terms_.begin()->second;
    return r;
  }
  // Pick a prime p dividing some radicand, split x = a + b*sqrt(p) with a, b
  // free of sqrt(p), and use 1/x = (a - b*sqrt(p)) * inv(a^2 - p*b^2). The
  // norm lives in a strictly smaller multiquadratic field, so this recurses
  // to the rational case.
  long prime = 0;
  for (const auto& [m, q] : terms_) {
    if (m == 1) continue;
    for (long p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        prime = p;
        break;
      }
    }
    if (prime == 0) prime = m;
    break;
  }
  RadicalScalar a, b;
  for (const auto& [m, q] : terms_) {
    if (m % prime == 0)
      b.insert_term(m / prime, q);
    else
      a.insert_term(m, q);
  }
  RadicalScalar sqrt_p = sqrt_term(1, prime);
  RadicalScalar norm = a * a - RadicalScalar(Rational(prime)) * b * b;
  return (a - b * sqrt_p) * norm.inverse();
}

double RadicalScalar::to_double() const {
  double v = 0.0;
  for (const auto& [m, q] : terms_)
    v += q.get_d() * std::sqrt(static_cast<double>(m));
  return v;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational abs_q = q < 0 ? Rational(-q) : q;
    if (first) {
      if (q < 0) out << "-";
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (m == 1) {
      out << abs_q.get_str();
    } else {
      if (abs_q != 1) out << abs_q.get_str() << "*";
      out << "sqrt(" << m << ")";
    }
  }
  return out.str();
}

}  // namespace vizsos
