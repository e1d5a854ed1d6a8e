#pragma once

#include <string>
#include <vector>

#include "vizsos/polynomial.hpp"
#include "vizsos/registry.hpp"

namespace vizsos {

// A generator with its provenance tag: boolean-e | domset-G | kcover-G |
// boolean-eH | domset-H | kcover-H | boolean-x | domset-box.
struct Generator {
  std::string tag;
  Polynomial poly;
};

struct GeneratorSet {
  std::vector<Generator> gens;
  OrderPtr order;

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& g : gens) ps.push_back(g.poly);
    return ps;
  }
};

enum class Side { G, H };

// The three generator families of one graph-class ideal, expanded and in
// canonical form. Zero generators (the k=1 cover family, where each factor
// is an empty sum) are dropped.
GeneratorSet build_I_G(const VarRegistry& reg, Side side, OrderPtr order);

// I_G + I_H generators plus the boolean-x and box-domination families over
// the full variable universe.
GeneratorSet build_I_viz(const VarRegistry& reg, OrderPtr order);
inline GeneratorSet build_I_viz(const VarRegistry& reg) {
  return build_I_viz(reg, reg.default_order());
}

// (sum of all x_gh) - kG*kH.
Polynomial build_f_viz(const VarRegistry& reg, OrderPtr order);
inline Polynomial build_f_viz(const VarRegistry& reg) {
  return build_f_viz(reg, reg.default_order());
}

}  // namespace vizsos
