#include "vizsos/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace vizsos {

namespace {

// Divide f by the (monic) divisors until no term is reducible. With `clamp`
// set, exponents are clamped to 1 before and during the division; this is
// reduction by the boolean generators, which the caller guarantees are in
// the ideal. Normal forms are per-coset, so clamping never changes the
// result, only the path.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& divisors,
                       bool clamp) {
  if (clamp) p = p.boolean_expanded();
  const OrderPtr& order = p.order();
  Polynomial remainder(order);
  std::vector<Polynomial::Term> kept;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* reducer = nullptr;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      kept.push_back(p.terms().front());
      // Drop the leading term and continue with the tail.
      Polynomial tail(order);
      std::vector<Polynomial::Term> rest(p.terms().begin() + 1,
                                         p.terms().end());
      tail = Polynomial::from_terms(order, std::move(rest));
      p = std::move(tail);
      continue;
    }
    Monomial quotient = lm.divide_by(reducer->leading_monomial());
    RadicalScalar c = -p.leading_coefficient();
    if (clamp) {
      Polynomial scaled_g(order);
      {
        std::vector<Polynomial::Term> raw;
        raw.reserve(reducer->terms().size());
        for (const auto& t : reducer->terms())
          raw.push_back({(t.monomial * quotient).boolean_expanded(), t.coeff});
        scaled_g = Polynomial::from_terms(order, std::move(raw));
      }
      p = p.add_scaled(scaled_g, c, Monomial());
    } else {
      p = p.add_scaled(*reducer, c, quotient);
    }
  }
  return Polynomial::from_terms(order, std::move(kept));
}

struct Pair {
  size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const GeneratorSet& gens, OrderPtr order,
                         const BuchbergerOptions& options) {
  return buchberger(gens.polynomials(), order, options);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& input, OrderPtr order,
                         const BuchbergerOptions& options) {
  GroebnerBasis out;
  out.order = order;
  out.source_hash = options.source_hash;

  // Detect the all-boolean fast path: every variable of the universe has a
  // literal z^2 - z generator.
  std::vector<uint8_t> has_boolean(order->num_vars(), 0);
  for (const auto& g : input) {
    if (g.term_count() != 2) continue;
    const auto& t0 = g.terms()[0];
    const auto& t1 = g.terms()[1];
    if (t0.monomial.exponents().size() != 1 ||
        t1.monomial.exponents().size() != 1)
      continue;
    auto [v0, e0] = t0.monomial.exponents()[0];
    auto [v1, e1] = t1.monomial.exponents()[0];
    if (v0 == v1 && e0 == 2 && e1 == 1 && t0.coeff == RadicalScalar(1) &&
        t1.coeff == -RadicalScalar(1))
      has_boolean[v0] = 1;
  }
  bool clamp = order->num_vars() > 0;
  for (uint8_t b : has_boolean) clamp = clamp && b;
  out.all_boolean = clamp;

  // Deterministic input: sorted by (degree, leading monomial), zero dropped.
  std::vector<Polynomial> basis;
  for (const auto& g : input)
    if (!g.is_zero()) basis.push_back(g.monic());
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return order->less(a.leading_monomial(), b.leading_monomial());
            });

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree())
      return a.lcm.degree() > b.lcm.degree();
    int cmp = order->compare(a.lcm, b.lcm);
    if (cmp != 0) return cmp > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(pair_less)> queue(
      pair_less);
  std::set<std::pair<size_t, size_t>> pending;

  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Monomial lcm =
          Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      queue.push({i, j, lcm});
      pending.insert({i, j});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  uint64_t processed = 0;
  while (!queue.empty()) {
    Pair pr = queue.top();
    queue.pop();
    pending.erase({pr.i, pr.j});
    if (++processed > options.max_pairs)
      throw GuardError("Buchberger pair limit exceeded (max-pairs=" +
                       std::to_string(options.max_pairs) + ")");

    const Polynomial& gi = basis[pr.i];
    const Polynomial& gj = basis[pr.j];
    // First criterion: coprime leading terms.
    if (gi.leading_monomial().coprime_with(gj.leading_monomial())) continue;
    // Second (chain) criterion: some k with LT(g_k) | lcm and both pairs
    // with k already handled.
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (!pending.count({key_ik.first, key_ik.second}) &&
          !pending.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    Monomial mi = pr.lcm.divide_by(gi.leading_monomial());
    Monomial mj = pr.lcm.divide_by(gj.leading_monomial());
    Polynomial s = Polynomial::zero(order)
                       .add_scaled(gi, RadicalScalar(1), mi)
                       .add_scaled(gj, -RadicalScalar(1), mj);
    s = reduce_full(std::move(s), basis, clamp);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    push_pairs_for(basis.size() - 1);
  }

  // Minimalise: drop elements whose leading term is divisible by another's.
  std::vector<uint8_t> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && !(li == lj && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Inter-reduce tails for the canonical reduced basis.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_full(minimal[i], others, false).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order->less(a.leading_monomial(), b.leading_monomial());
            });
  out.basis = std::move(reduced);
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!f.is_zero() && !(*f.order() == *gb.order))
    throw StructuralError("normal_form: order mismatch");
  return reduce_full(f, gb.basis, gb.all_boolean);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int ell) {
  if (ell < 0) throw ValidationError("standard_monomials needs ell >= 0");
  const uint32_t n = gb.order->num_vars();
  std::vector<Monomial> result;

  auto reducible = [&](const Monomial& m) {
    for (const auto& g : gb.basis)
      if (g.leading_monomial().divides(m)) return true;
    return false;
  };

  // Extend each standard monomial by one variable at a time, never
  // decreasing the variable id; that enumerates every monomial exactly once,
  // and any extension of a reducible monomial stays reducible.
  struct Item {
    Monomial m;
    uint32_t min_var;
  };
  std::vector<Item> stack;
  Monomial one;
  if (!reducible(one)) {
    result.push_back(one);
    stack.push_back({one, 0});
  }
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (static_cast<int>(it.m.degree()) >= ell) continue;
    for (uint32_t v = it.min_var; v < n; ++v) {
      Monomial grown = it.m * Monomial::variable(v);
      if (reducible(grown)) continue;
      result.push_back(grown);
      stack.push_back({grown, v});
    }
  }
  std::sort(result.begin(), result.end(),
            [&](const Monomial& a, const Monomial& b) {
              return gb.order->less(a, b);
            });
  return result;
}

}  // namespace vizsos
