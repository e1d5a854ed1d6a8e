#pragma once

#include <string>
#include <vector>

#include "vizsos/radical.hpp"

namespace vizsos {

// Univariate polynomial in a formal symbol (the graph-size parameter) with
// RadicalScalar coefficients. Canonical: no trailing zero coefficients.
class NHPoly {
 public:
  NHPoly() = default;
  NHPoly(const RadicalScalar& c);  // NOLINT: implicit by design
  NHPoly(const Rational& q) : NHPoly(RadicalScalar(q)) {}
  NHPoly(long n) : NHPoly(RadicalScalar(n)) {}

  static NHPoly symbol();
  static NHPoly from_coefficients(std::vector<RadicalScalar> coeffs);
  // prod_{t=from}^{from+count-1} (nh - t).
  static NHPoly falling_product(long from, unsigned count);
  // C(nh, k) as a polynomial: falling_product(0, k) / k!.
  static NHPoly binomial_poly(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  RadicalScalar coefficient(size_t power) const;
  const std::vector<RadicalScalar>& coefficients() const { return coeffs_; }

  NHPoly operator-() const;
  NHPoly operator+(const NHPoly& other) const;
  NHPoly operator-(const NHPoly& other) const;
  NHPoly operator*(const NHPoly& other) const;
  NHPoly& operator+=(const NHPoly& other) { return *this = *this + other; }
  NHPoly& operator-=(const NHPoly& other) { return *this = *this - other; }
  NHPoly& operator*=(const NHPoly& other) { return *this = *this * other; }
  NHPoly scaled(const RadicalScalar& c) const;

  bool operator==(const NHPoly& other) const {
    return coeffs_ == other.coeffs_;
  }
  bool operator!=(const NHPoly& other) const { return !(*this == other); }

  RadicalScalar evaluate(const Rational& at) const;
  RadicalScalar evaluate(const RadicalScalar& at) const;

  std::string to_string(const std::string& symbol = "nH") const;

 private:
  void trim();
  std::vector<RadicalScalar> coeffs_;
};

// Lagrange interpolation through (nodes[i], values[i]); node differences are
// rational so no radical inversion is needed.
NHPoly interpolate(const std::vector<Rational>& nodes,
                   const std::vector<RadicalScalar>& values);

}  // namespace vizsos
