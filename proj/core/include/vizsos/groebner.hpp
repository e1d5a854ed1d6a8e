#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vizsos/model.hpp"
#include "vizsos/polynomial.hpp"

namespace vizsos {

// Reduced Groebner basis: pairwise minimal, monic, fully inter-reduced,
// sorted ascending by leading monomial. `all_boolean` records that the
// source ideal carried z^2 - z for every variable, which licenses the
// exponent-clamping fast path in reductions.
struct GroebnerBasis {
  std::vector<Polynomial> basis;
  OrderPtr order;
  std::string source_hash;
  bool all_boolean = false;

  size_t size() const { return basis.size(); }
};

struct BuchbergerOptions {
  // Guard on processed S-pairs; exceeding it is a resource error.
  uint64_t max_pairs = 20'000'000;
  std::string source_hash;
};

GroebnerBasis buchberger(const GeneratorSet& gens, OrderPtr order,
                         const BuchbergerOptions& options = {});
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, OrderPtr order,
                         const BuchbergerOptions& options = {});

// Canonical remainder: no term divisible by any leading term of the basis,
// f - NF(f) in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

inline bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

// All monomials of degree <= ell not divisible by any leading term, sorted
// ascending by the basis order (so the constant monomial comes first).
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int ell);

}  // namespace vizsos
