#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vizsos/monomial.hpp"

namespace vizsos {

// The tuple (n_G, k_G, n_H, k_H). Dominating sets are fixed to the first
// k labels of each vertex set; vertices are labelled 1..n in names and
// 0..n-1 internally.
struct ClassParams {
  int nG = 1;
  int kG = 1;
  int nH = 1;
  int kH = 1;

  void validate() const;
  bool operator==(const ClassParams&) const = default;
  std::string to_string() const;
};

// Canonical indexing of the polynomial ring variables: the e_G block
// (pairs of G vertices, lexicographic), then the e_H block, then the x
// block ((g,h) by g then h). Names: "e_G_1_2", "e_H_1_3", "x_2_1".
class VarRegistry {
 public:
  explicit VarRegistry(const ClassParams& params);

  const ClassParams& params() const { return params_; }
  uint32_t num_vars() const { return static_cast<uint32_t>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(uint32_t var) const { return names_.at(var); }

  // All arguments 0-based, g < g' and h < h'.
  uint32_t e_G(int g, int g2) const;
  uint32_t e_H(int h, int h2) const;
  uint32_t x(int g, int h) const;

  uint32_t e_G_count() const { return e_G_count_; }
  uint32_t e_H_count() const { return e_H_count_; }

  enum class VarKind { e_G, e_H, x };
  struct Decoded {
    VarKind kind;
    int a;  // g (or h for e_H), 0-based
    int b;  // g' (or h' / h), 0-based
  };
  Decoded decode(uint32_t var) const;

  // degrevlex over the canonical block precedence (the documented default).
  OrderPtr default_order() const;
  OrderPtr order(MonomialOrder::Kind kind) const;

 private:
  ClassParams params_;
  std::vector<std::string> names_;
  uint32_t e_G_count_ = 0;
  uint32_t e_H_count_ = 0;
};

}  // namespace vizsos
