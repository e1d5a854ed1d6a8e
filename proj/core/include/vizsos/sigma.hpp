#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vizsos/nhpoly.hpp"
#include "vizsos/polynomial.hpp"
#include "vizsos/registry.hpp"

namespace vizsos {

// Element of the span of {sigma_i} and {sigma_i * sigma_j} with coefficients
// polynomial in the symbolic graph size n_H. sigma_0 is the unit; product
// keys keep i >= j and products with j = 0 collapse into the linear part.
class SigmaPoly {
 public:
  SigmaPoly() = default;

  static SigmaPoly sigma(int i, const NHPoly& coeff = NHPoly(1L));
  static SigmaPoly sigma_product(int i, int j, const NHPoly& coeff = NHPoly(1L));
  static SigmaPoly unit() { return sigma(0); }

  void add_sigma(int i, const NHPoly& coeff);
  void add_product(int i, int j, const NHPoly& coeff);

  const std::map<int, NHPoly>& linear() const { return linear_; }
  const std::map<std::pair<int, int>, NHPoly>& products() const {
    return products_;
  }
  bool is_zero() const { return linear_.empty() && products_.empty(); }

  SigmaPoly operator+(const SigmaPoly& other) const;
  SigmaPoly operator-(const SigmaPoly& other) const;
  SigmaPoly scaled(const NHPoly& c) const;
  // Products beyond quadratic in sigma leave the representable span and are
  // a validation error.
  SigmaPoly operator*(const SigmaPoly& other) const;

  NHPoly coefficient(int i) const;

  std::string to_string() const;

 private:
  std::map<int, NHPoly> linear_;
  std::map<std::pair<int, int>, NHPoly> products_;
};

// phi_0..phi_d of the canonical form sum_i phi_i sigma_i.
struct ReducedSigmaForm {
  std::vector<NHPoly> phi;

  NHPoly& operator[](size_t i) { return phi[i]; }
  const NHPoly& operator[](size_t i) const { return phi[i]; }
};

// sigma_i * sigma_j == sum_{r=0}^{j} binom(j,r) binom(i+r,j) sigma_{i+r};
// the summation range is extended to r <= j, sigma_{i > n_H} vanishing is
// handled at reduction time. Requires i >= j >= 0.
SigmaPoly sigma_product_rule(int i, int j);

// Expansion of sigma_{d+j+1} into sigma_j..sigma_{j+d} with NHPoly
// coefficients (the binomial ratio is a polynomial of degree d+1-r).
// Requires d >= 1, j >= 0.
SigmaPoly sigma_degree_rule(int d, int j);

// Clear all products via the product rule, then apply the degree rule until
// every index is <= d. For d = 0, sigma_i collapses to binom(n_H, i).
ReducedSigmaForm reduce_canonical(const SigmaPoly& expr, int d);

// Same reduction with n_H fixed to a concrete integer (sigma_{i > n_H} drops
// to zero); used to check the evaluation homomorphism.
std::vector<RadicalScalar> reduce_canonical_at(const SigmaPoly& expr, int d,
                                               long nH);

// The concrete elementary symmetric polynomial of degree i in the x_{g,.}
// variables; zero when i exceeds n_H.
Polynomial expand_sigma_instance(int g, int i, const VarRegistry& reg,
                                 OrderPtr order);

}  // namespace vizsos
