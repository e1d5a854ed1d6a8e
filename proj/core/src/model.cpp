#include "vizsos/model.hpp"

namespace vizsos {

namespace {

Polynomial one_minus(const Polynomial& p) {
  return Polynomial::constant(p.order(), RadicalScalar(1)) - p;
}

}  // namespace

GeneratorSet build_I_G(const VarRegistry& reg, Side side, OrderPtr order) {
  const ClassParams& p = reg.params();
  const int n = side == Side::G ? p.nG : p.nH;
  const int k = side == Side::G ? p.kG : p.kH;
  const bool is_g = side == Side::G;
  auto edge = [&](int a, int b) {
    return Polynomial::variable(order, is_g ? reg.e_G(a, b) : reg.e_H(a, b));
  };

  GeneratorSet out;
  out.order = order;
  const std::string boolean_tag = is_g ? "boolean-e" : "boolean-eH";
  const std::string domset_tag = is_g ? "domset-G" : "domset-H";
  const std::string kcover_tag = is_g ? "kcover-G" : "kcover-H";

  // e^2 - e for every vertex pair.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Polynomial e = edge(a, b);
      out.gens.push_back({boolean_tag, e * e - e});
    }

  // prod_{a in D} (1 - e_{a b}) for b outside the dominating set.
  for (int b = k; b < n; ++b) {
    Polynomial prod = Polynomial::constant(order, RadicalScalar(1));
    for (int a = 0; a < k; ++a) prod = prod * one_minus(edge(a, b));
    out.gens.push_back({domset_tag, prod});
  }

  // prod_{b notin S} (sum_{a in S} e_{a b}) for every S of size k-1.
  // For k = 1 the only S is empty; each factor is the empty sum, the
  // generator is 0 and is dropped.
  std::vector<int> subset(k - 1);
  auto emit_for_subset = [&](const std::vector<int>& s) {
    Polynomial prod = Polynomial::constant(order, RadicalScalar(1));
    for (int b = 0; b < n; ++b) {
      bool in_s = false;
      for (int a : s) in_s |= (a == b);
      if (in_s) continue;
      Polynomial sum = Polynomial::zero(order);
      for (int a : s) sum = sum + edge(a, b);
      prod = prod * sum;
    }
    if (!prod.is_zero()) out.gens.push_back({kcover_tag, prod});
  };
  if (k >= 2) {
    // Enumerate subsets of size k-1 lexicographically.
    for (int i = 0; i < k - 1; ++i) subset[i] = i;
    while (true) {
      emit_for_subset(subset);
      int i = k - 2;
      while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k - 1; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return out;
}

GeneratorSet build_I_viz(const VarRegistry& reg, OrderPtr order) {
  const ClassParams& p = reg.params();
  GeneratorSet out = build_I_G(reg, Side::G, order);
  GeneratorSet h = build_I_G(reg, Side::H, order);
  out.gens.insert(out.gens.end(), h.gens.begin(), h.gens.end());

  for (int g = 0; g < p.nG; ++g)
    for (int hh = 0; hh < p.nH; ++hh) {
      Polynomial x = Polynomial::variable(order, reg.x(g, hh));
      out.gens.push_back({"boolean-x", x * x - x});
    }

  // (1 - x_gh) * prod_{g' != g} (1 - e_{gg'} x_{g'h})
  //            * prod_{h' != h} (1 - e_{hh'} x_{gh'}).
  for (int g = 0; g < p.nG; ++g)
    for (int hh = 0; hh < p.nH; ++hh) {
      Polynomial prod = one_minus(Polynomial::variable(order, reg.x(g, hh)));
      for (int g2 = 0; g2 < p.nG; ++g2) {
        if (g2 == g) continue;
        Polynomial e = Polynomial::variable(order, reg.e_G(g, g2));
        Polynomial x = Polynomial::variable(order, reg.x(g2, hh));
        prod = prod * one_minus(e * x);
      }
      for (int h2 = 0; h2 < p.nH; ++h2) {
        if (h2 == hh) continue;
        Polynomial e = Polynomial::variable(order, reg.e_H(hh, h2));
        Polynomial x = Polynomial::variable(order, reg.x(g, h2));
        prod = prod * one_minus(e * x);
      }
      out.gens.push_back({"domset-box", prod});
    }
  return out;
}

Polynomial build_f_viz(const VarRegistry& reg, OrderPtr order) {
  const ClassParams& p = reg.params();
  std::vector<Polynomial::Term> terms;
  for (int g = 0; g < p.nG; ++g)
    for (int hh = 0; hh < p.nH; ++hh)
      terms.push_back({Monomial::variable(reg.x(g, hh)), RadicalScalar(1)});
  terms.push_back({Monomial(), RadicalScalar(Rational(-p.kG * p.kH))});
  return Polynomial::from_terms(order, std::move(terms));
}

}  // namespace vizsos
