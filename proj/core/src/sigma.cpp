#include "vizsos/sigma.hpp"

#include <sstream>

namespace vizsos {

SigmaPoly SigmaPoly::sigma(int i, const NHPoly& coeff) {
  SigmaPoly p;
  p.add_sigma(i, coeff);
  return p;
}

SigmaPoly SigmaPoly::sigma_product(int i, int j, const NHPoly& coeff) {
  SigmaPoly p;
  p.add_product(i, j, coeff);
  return p;
}

void SigmaPoly::add_sigma(int i, const NHPoly& coeff) {
  if (i < 0) throw ValidationError("sigma index must be >= 0");
  if (coeff.is_zero()) return;
  auto [it, inserted] = linear_.emplace(i, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) linear_.erase(it);
  }
}

void SigmaPoly::add_product(int i, int j, const NHPoly& coeff) {
  if (i < j) std::swap(i, j);
  if (j < 0) throw ValidationError("sigma index must be >= 0");
  if (j == 0) {
    add_sigma(i, coeff);  // sigma_0 is the unit
    return;
  }
  if (coeff.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = products_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) products_.erase(it);
  }
}

SigmaPoly SigmaPoly::operator+(const SigmaPoly& other) const {
  SigmaPoly p = *this;
  for (const auto& [i, c] : other.linear_) p.add_sigma(i, c);
  for (const auto& [ij, c] : other.products_)
    p.add_product(ij.first, ij.second, c);
  return p;
}

SigmaPoly SigmaPoly::operator-(const SigmaPoly& other) const {
  return *this + other.scaled(NHPoly(-1L));
}

SigmaPoly SigmaPoly::scaled(const NHPoly& c) const {
  SigmaPoly p;
  for (const auto& [i, k] : linear_) p.add_sigma(i, k * c);
  for (const auto& [ij, k] : products_)
    p.add_product(ij.first, ij.second, k * c);
  return p;
}

SigmaPoly SigmaPoly::operator*(const SigmaPoly& other) const {
  auto is_constant = [](const SigmaPoly& p) {
    return p.products_.empty() &&
           (p.linear_.empty() ||
            (p.linear_.size() == 1 && p.linear_.begin()->first == 0));
  };
  if (is_constant(other)) return scaled(other.coefficient(0));
  if (is_constant(*this)) return other.scaled(coefficient(0));
  if (!products_.empty() || !other.products_.empty())
    throw ValidationError("sigma product beyond quadratic degree");
  SigmaPoly p;
  for (const auto& [i, ci] : linear_)
    for (const auto& [j, cj] : other.linear_) p.add_product(i, j, ci * cj);
  return p;
}

NHPoly SigmaPoly::coefficient(int i) const {
  auto it = linear_.find(i);
  return it == linear_.end() ? NHPoly() : it->second;
}

std::string SigmaPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const NHPoly& c, const std::string& sym) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (!sym.empty()) out << "*" << sym;
  };
  for (const auto& [i, c] : linear_)
    emit(c, i == 0 ? "" : "s" + std::to_string(i));
  for (const auto& [ij, c] : products_)
    emit(c, "s" + std::to_string(ij.first) + "*s" + std::to_string(ij.second));
  return out.str();
}

SigmaPoly sigma_product_rule(int i, int j) {
  if (j < 0 || i < j)
    throw ValidationError("sigma_product_rule requires i >= j >= 0");
  SigmaPoly out;
  for (int r = 0; r <= j; ++r) {
    Integer c = binomial(Integer(j), r) * binomial(Integer(i + r), j);
    out.add_sigma(i + r, NHPoly(RadicalScalar(Rational(c))));
  }
  return out;
}

SigmaPoly sigma_degree_rule(int d, int j) {
  if (d < 1 || j < 0)
    throw ValidationError("sigma_degree_rule requires d >= 1, j >= 0");
  // binom(nh, d+j+1) / binom(nh, j+r) =
  //   prod_{t=j+r}^{d+j} (nh - t) / ((d+j+1)! / (j+r)!).
  SigmaPoly out;
  for (int r = 0; r <= d; ++r) {
    NHPoly ratio = NHPoly::falling_product(j + r, d + 1 - r);
    Rational denom(factorial(d + j + 1) / factorial(j + r));
    Rational sign((d + r) % 2 == 0 ? 1 : -1);
    Rational c = sign * Rational(binomial(Integer(d + 1), r)) / denom;
    out.add_sigma(j + r, ratio.scaled(RadicalScalar(c)));
  }
  return out;
}

ReducedSigmaForm reduce_canonical(const SigmaPoly& expr, int d) {
  if (d < 0) throw ValidationError("reduce_canonical requires d >= 0");
  std::map<int, NHPoly> linear = expr.linear();
  auto add = [&](int i, const NHPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = linear.emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) linear.erase(it);
    }
  };
  for (const auto& [ij, c] : expr.products()) {
    SigmaPoly rule = sigma_product_rule(ij.first, ij.second);
    for (const auto& [k, rc] : rule.linear()) add(k, rc * c);
  }
  while (!linear.empty() && linear.rbegin()->first > d) {
    int m = linear.rbegin()->first;
    NHPoly c = linear.rbegin()->second;
    linear.erase(m);
    if (d == 0) {
      // x_gh == 1 over the ideal, so sigma_m collapses to binom(n_H, m).
      add(0, NHPoly::binomial_poly(static_cast<unsigned>(m)) * c);
    } else {
      SigmaPoly rule = sigma_degree_rule(d, m - d - 1);
      for (const auto& [k, rc] : rule.linear()) add(k, rc * c);
    }
  }
  ReducedSigmaForm form;
  form.phi.assign(d + 1, NHPoly());
  for (const auto& [i, c] : linear) form.phi[i] = c;
  return form;
}

std::vector<RadicalScalar> reduce_canonical_at(const SigmaPoly& expr, int d,
                                               long nH) {
  if (d < 0 || nH < d + 1)
    throw ValidationError("reduce_canonical_at requires nH >= d+1 >= 1");
  std::map<int, RadicalScalar> linear;
  auto add = [&](int i, const RadicalScalar& c) {
    if (c.is_zero()) return;
    if (i > nH) return;  // sigma_i = 0 for i > n_H
    auto [it, inserted] = linear.emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) linear.erase(it);
    }
  };
  Rational at(nH);
  for (const auto& [i, c] : expr.linear()) add(i, c.evaluate(at));
  for (const auto& [ij, c] : expr.products()) {
    SigmaPoly rule = sigma_product_rule(ij.first, ij.second);
    for (const auto& [k, rc] : rule.linear())
      add(k, rc.evaluate(at) * c.evaluate(at));
  }
  while (!linear.empty() && linear.rbegin()->first > d) {
    int m = linear.rbegin()->first;
    RadicalScalar c = linear.rbegin()->second;
    linear.erase(m);
    if (d == 0) {
      add(0, RadicalScalar(Rational(binomial(Integer(nH), m))) * c);
    } else {
      SigmaPoly rule = sigma_degree_rule(d, m - d - 1);
      for (const auto& [k, rc] : rule.linear()) add(k, rc.evaluate(at) * c);
    }
  }
  std::vector<RadicalScalar> phi(d + 1);
  for (const auto& [i, c] : linear) phi[i] = c;
  return phi;
}

Polynomial expand_sigma_instance(int g, int i, const VarRegistry& reg,
                                 OrderPtr order) {
  const ClassParams& p = reg.params();
  if (g < 0 || g >= p.nG)
    throw ValidationError("expand_sigma_instance: g out of range");
  if (i < 0) throw ValidationError("expand_sigma_instance: i must be >= 0");
  if (i > p.nH) return Polynomial::zero(order);
  std::vector<Polynomial::Term> terms;
  std::vector<int> subset(i);
  for (int t = 0; t < i; ++t) subset[t] = t;
  while (true) {
    std::vector<std::pair<uint32_t, uint32_t>> exps;
    for (int h : subset) exps.emplace_back(reg.x(g, h), 1);
    terms.push_back({Monomial::from_pairs(std::move(exps)), RadicalScalar(1)});
    if (i == 0) break;
    int t = i - 1;
    while (t >= 0 && subset[t] == p.nH - (i - t)) --t;
    if (t < 0) break;
    ++subset[t];
    for (int u = t + 1; u < i; ++u) subset[u] = subset[u - 1] + 1;
  }
  return Polynomial::from_terms(order, std::move(terms));
}

}  // namespace vizsos
