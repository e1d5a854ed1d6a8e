#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vizsos/monomial.hpp"
#include "vizsos/radical.hpp"

namespace vizsos {

// Sparse multivariate polynomial over RadicalScalar with a fixed monomial
// order. Terms are kept sorted descending (leading term first) with no zero
// coefficients; every operation returns canonical form so zero tests are a
// size check.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    RadicalScalar coeff;
  };

  explicit Polynomial(OrderPtr order) : order_(std::move(order)) {}

  static Polynomial zero(OrderPtr order) { return Polynomial(std::move(order)); }
  static Polynomial constant(OrderPtr order, const RadicalScalar& c);
  static Polynomial variable(OrderPtr order, uint32_t var);
  static Polynomial from_terms(OrderPtr order, std::vector<Term> terms);

  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  uint32_t degree() const;

  const Monomial& leading_monomial() const;
  const RadicalScalar& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const RadicalScalar& c) const;
  // this + c * m * g, the Groebner reduction step, in one merge pass.
  Polynomial add_scaled(const Polynomial& g, const RadicalScalar& c,
                        const Monomial& m) const;

  // Leading coefficient 1 (divides through; exact).
  Polynomial monic() const;

  // Every exponent > 1 replaced by 1. Sound as an oracle for the quotient by
  // all z^2 - z generators only; callers must know all variables carry
  // boolean generators.
  Polynomial boolean_expanded() const;

  // Evaluation at a 0/1 point (one flag per variable id).
  RadicalScalar evaluate01(const std::vector<uint8_t>& point) const;
  RadicalScalar evaluate(const std::vector<RadicalScalar>& point) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string to_string(
      const std::function<std::string(uint32_t)>& var_name) const;

  void check_same_universe(const Polynomial& other) const;

 private:
  void sort_and_combine(std::vector<Term> raw);

  OrderPtr order_;
  std::vector<Term> terms_;
};

Polynomial boolean_expand(const Polynomial& p);

}  // namespace vizsos
