#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "vizsos/errors.hpp"

namespace vizsos {

// Sparse power product. Exponents are kept sorted by variable id with no
// zero entries; total degree is cached, and a folded 64-bit variable mask
// gives a cheap necessary condition for divisibility.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(uint32_t var, uint32_t exp = 1) {
    Monomial m;
    if (exp > 0) {
      m.exps_.emplace_back(var, exp);
      m.degree_ = exp;
      m.mask_ = bit(var);
    }
    return m;
  }

  static Monomial from_pairs(std::vector<std::pair<uint32_t, uint32_t>> exps);

  bool is_one() const { return exps_.empty(); }
  uint32_t degree() const { return degree_; }
  uint64_t mask() const { return mask_; }
  const std::vector<std::pair<uint32_t, uint32_t>>& exponents() const {
    return exps_;
  }
  uint32_t exponent(uint32_t var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool divides(const Monomial& other) const;
  // this / other; requires other | this.
  Monomial divide_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& other) const;

  // Every exponent > 1 clamped to 1 (the x^2 -> x rewrite of boolean
  // quotients).
  Monomial boolean_expanded() const;
  bool is_squarefree() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  static uint64_t bit(uint32_t var) { return 1ULL << (var & 63u); }

  std::vector<std::pair<uint32_t, uint32_t>> exps_;
  uint32_t degree_ = 0;
  uint64_t mask_ = 0;
};

// Total order on monomials over a fixed variable universe. Precedence is a
// permutation of variable ids; precedence rank 0 is the strongest variable.
// The default ranks variables by their id, which the registry lays out as
// e_G block, then e_H block, then x block.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex };

  MonomialOrder(Kind kind, uint32_t num_vars)
      : kind_(kind), num_vars_(num_vars) {}
  MonomialOrder(Kind kind, uint32_t num_vars, std::vector<uint32_t> precedence);

  Kind kind() const { return kind_; }
  uint32_t num_vars() const { return num_vars_; }

  // <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& other) const;

 private:
  // rank_of_[var] = precedence rank; empty means identity.
  Kind kind_;
  uint32_t num_vars_;
  std::vector<uint32_t> rank_of_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

inline OrderPtr make_order(MonomialOrder::Kind kind, uint32_t num_vars) {
  return std::make_shared<const MonomialOrder>(kind, num_vars);
}

}  // namespace vizsos
