#include "vizsos/registry.hpp"

#include <sstream>

#include "vizsos/errors.hpp"

namespace vizsos {

void ClassParams::validate() const {
  if (nG < 1 || nH < 1 || kG < 1 || kH < 1 || kG > nG || kH > nH) {
    std::ostringstream out;
    out << "invalid class parameters " << to_string()
        << " (need 1 <= k <= n on both sides)";
    throw ValidationError(out.str());
  }
}

std::string ClassParams::to_string() const {
  std::ostringstream out;
  out << "(nG=" << nG << ", kG=" << kG << ", nH=" << nH << ", kH=" << kH
      << ")";
  return out.str();
}

VarRegistry::VarRegistry(const ClassParams& params) : params_(params) {
  params.validate();
  for (int g = 0; g < params.nG; ++g)
    for (int g2 = g + 1; g2 < params.nG; ++g2)
      names_.push_back("e_G_" + std::to_string(g + 1) + "_" +
                       std::to_string(g2 + 1));
  e_G_count_ = static_cast<uint32_t>(names_.size());
  for (int h = 0; h < params.nH; ++h)
    for (int h2 = h + 1; h2 < params.nH; ++h2)
      names_.push_back("e_H_" + std::to_string(h + 1) + "_" +
                       std::to_string(h2 + 1));
  e_H_count_ = static_cast<uint32_t>(names_.size()) - e_G_count_;
  for (int g = 0; g < params.nG; ++g)
    for (int h = 0; h < params.nH; ++h)
      names_.push_back("x_" + std::to_string(g + 1) + "_" +
                       std::to_string(h + 1));
}

namespace {
// Index of the pair {a,b}, a < b, in lexicographic order over n labels.
uint32_t pair_index(int a, int b, int n) {
  return static_cast<uint32_t>(a * (2 * n - a - 1) / 2 + (b - a - 1));
}
}  // namespace

uint32_t VarRegistry::e_G(int g, int g2) const {
  if (g > g2) std::swap(g, g2);
  if (g < 0 || g2 >= params_.nG || g == g2)
    throw StructuralError("bad e_G pair");
  return pair_index(g, g2, params_.nG);
}

uint32_t VarRegistry::e_H(int h, int h2) const {
  if (h > h2) std::swap(h, h2);
  if (h < 0 || h2 >= params_.nH || h == h2)
    throw StructuralError("bad e_H pair");
  return e_G_count_ + pair_index(h, h2, params_.nH);
}

uint32_t VarRegistry::x(int g, int h) const {
  if (g < 0 || g >= params_.nG || h < 0 || h >= params_.nH)
    throw StructuralError("bad x index");
  return e_G_count_ + e_H_count_ +
         static_cast<uint32_t>(g * params_.nH + h);
}

VarRegistry::Decoded VarRegistry::decode(uint32_t var) const {
  if (var >= num_vars()) throw StructuralError("variable id out of range");
  if (var < e_G_count_) {
    for (int g = 0; g < params_.nG; ++g)
      for (int g2 = g + 1; g2 < params_.nG; ++g2)
        if (e_G(g, g2) == var) return {VarKind::e_G, g, g2};
  } else if (var < e_G_count_ + e_H_count_) {
    for (int h = 0; h < params_.nH; ++h)
      for (int h2 = h + 1; h2 < params_.nH; ++h2)
        if (e_H(h, h2) == var) return {VarKind::e_H, h, h2};
  } else {
    uint32_t i = var - e_G_count_ - e_H_count_;
    return {VarKind::x, static_cast<int>(i) / params_.nH,
            static_cast<int>(i) % params_.nH};
  }
  throw StructuralError("unreachable");
}

OrderPtr VarRegistry::default_order() const {
  return order(MonomialOrder::Kind::degrevlex);
}

OrderPtr VarRegistry::order(MonomialOrder::Kind kind) const {
  return make_order(kind, num_vars());
}

}  // namespace vizsos
