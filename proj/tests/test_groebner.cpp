#include <doctest.h>

#include <random>

#include "vizsos/groebner.hpp"
#include "vizsos/model.hpp"
#include "vizsos/variety.hpp"

using namespace vizsos;

namespace {

// z1^2-z1, z2^2-z2, z1z2-1: the variety is the single point (1,1).
std::vector<Polynomial> two_variable_example(OrderPtr order) {
  Polynomial z1 = Polynomial::variable(order, 0);
  Polynomial z2 = Polynomial::variable(order, 1);
  Polynomial one = Polynomial::constant(order, RadicalScalar(1));
  return {z1 * z1 - z1, z2 * z2 - z2, z1 * z2 - one};
}

}  // namespace

TEST_CASE("reduced basis of the two-variable example") {
  OrderPtr order = make_order(MonomialOrder::Kind::degrevlex, 2);
  GroebnerBasis gb = buchberger(two_variable_example(order), order);
  Polynomial z1 = Polynomial::variable(order, 0);
  Polynomial z2 = Polynomial::variable(order, 1);
  Polynomial one = Polynomial::constant(order, RadicalScalar(1));
  REQUIRE(gb.size() == 2);
  auto contains = [&](const Polynomial& p) {
    for (const auto& g : gb.basis)
      if (g == p) return true;
    return false;
  };
  CHECK(contains(z1 - one));
  CHECK(contains(z2 - one));

  // z1 + z2 - 2 == (z1 - z2)^2 mod I
  Polynomial f = z1 + z2 - one - one - (z1 - z2) * (z1 - z2);
  CHECK(normal_form(f, gb).is_zero());
  CHECK(normal_form(Polynomial::zero(order), gb).is_zero());
}

TEST_CASE("empty generator set yields the empty basis") {
  OrderPtr order = make_order(MonomialOrder::Kind::degrevlex, 2);
  GroebnerBasis gb = buchberger(std::vector<Polynomial>{}, order);
  CHECK(gb.size() == 0);
  CHECK(standard_monomials(gb, 0).size() == 1);
}

TEST_CASE("normal form properties on a class ideal") {
  VarRegistry reg({2, 2, 2, 2});
  OrderPtr order = reg.default_order();
  GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
  CHECK(gb.all_boolean);

  // NF is idempotent and linear.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<uint32_t> var(0, reg.num_vars() - 1);
  auto random_poly = [&]() {
    std::vector<Polynomial::Term> terms;
    for (int t = 0; t < 6; ++t) {
      std::vector<std::pair<uint32_t, uint32_t>> exps;
      for (int v = 0; v < 2; ++v) exps.emplace_back(var(rng), 1);
      terms.push_back({Monomial::from_pairs(std::move(exps)),
                       RadicalScalar(Rational(coeff(rng)))});
    }
    return Polynomial::from_terms(order, std::move(terms));
  };
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_poly();
    Polynomial g = random_poly();
    Polynomial nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    RadicalScalar a(Rational(coeff(rng)));
    RadicalScalar b(Rational(coeff(rng)));
    Polynomial lhs = normal_form(f.scaled(a) + g.scaled(b), gb);
    Polynomial rhs = normal_form(f, gb).scaled(a) + normal_form(g, gb).scaled(b);
    CHECK(lhs == rhs);
    // f - NF(f) is in the ideal: it vanishes on the variety.
    CHECK(vanishes_on_variety(f - nf, reg));
  }
}

TEST_CASE("all S-polynomials of a computed basis reduce to zero") {
  for (ClassParams p : {ClassParams{2, 1, 2, 1}, ClassParams{2, 2, 2, 2},
                        ClassParams{1, 1, 3, 2}}) {
    VarRegistry reg(p);
    OrderPtr order = reg.default_order();
    GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j) {
        const Monomial lcm = Monomial::lcm(gb.basis[i].leading_monomial(),
                                           gb.basis[j].leading_monomial());
        Polynomial s =
            Polynomial::zero(order)
                .add_scaled(gb.basis[i], RadicalScalar(1),
                            lcm.divide_by(gb.basis[i].leading_monomial()))
                .add_scaled(gb.basis[j], -RadicalScalar(1),
                            lcm.divide_by(gb.basis[j].leading_monomial()));
        CHECK(normal_form(s, gb).is_zero());
      }
  }
}

TEST_CASE("basis recomputation is deterministic") {
  VarRegistry reg({2, 2, 2, 1});
  OrderPtr order = reg.default_order();
  GroebnerBasis a = buchberger(build_I_viz(reg, order), order);
  GroebnerBasis b = buchberger(build_I_viz(reg, order), order);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
}

TEST_CASE("membership lemmas") {
  {
    // kG = nG: every e variable is in the ideal.
    VarRegistry reg({2, 2, 2, 1});
    OrderPtr order = reg.default_order();
    GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
    CHECK(is_member(Polynomial::variable(order, reg.e_G(0, 1)), gb));
  }
  {
    // kG = nG - 1: e over dominating-set pairs is in the ideal.
    VarRegistry reg({3, 2, 2, 1});
    OrderPtr order = reg.default_order();
    GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
    CHECK(is_member(Polynomial::variable(order, reg.e_G(0, 1)), gb));
    // The variety is nonempty so the constant 1 is not a member.
    CHECK(!is_member(Polynomial::constant(order, RadicalScalar(1)), gb));
  }
  {
    VarRegistry reg({2, 2, 2, 2});
    OrderPtr order = reg.default_order();
    GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
    CHECK(!is_member(Polynomial::constant(order, RadicalScalar(1)), gb));
  }
}

TEST_CASE("normal form of x - 1 in the one-variable class") {
  VarRegistry reg({1, 1, 1, 1});
  OrderPtr order = reg.default_order();
  GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
  Polynomial f = Polynomial::variable(order, reg.x(0, 0)) -
                 Polynomial::constant(order, RadicalScalar(1));
  CHECK(normal_form(f, gb).is_zero());
}

TEST_CASE("standard monomial count at full degree equals variety size") {
  for (ClassParams p : {ClassParams{2, 1, 2, 1}, ClassParams{2, 2, 2, 2},
                        ClassParams{2, 2, 2, 1}, ClassParams{1, 1, 3, 2}}) {
    VarRegistry reg(p);
    OrderPtr order = reg.default_order();
    GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
    auto points = enumerate_variety(reg);
    if (points.size() > 200) continue;
    auto monos = standard_monomials(gb, static_cast<int>(reg.num_vars()));
    CHECK(monos.size() == points.size());
    // ell = 0 only has the constant monomial.
    auto ell0 = standard_monomials(gb, 0);
    REQUIRE(ell0.size() == 1);
    CHECK(ell0[0].is_one());
  }
}

TEST_CASE("pair limit raises a resource guard error") {
  VarRegistry reg({3, 2, 3, 2});
  OrderPtr order = reg.default_order();
  BuchbergerOptions opts;
  opts.max_pairs = 3;
  CHECK_THROWS_AS(buchberger(build_I_viz(reg, order), order, opts),
                  GuardError);
}

TEST_CASE("membership matches vanishing on random small polynomials") {
  std::mt19937 rng(31);
  for (ClassParams p : {ClassParams{2, 1, 2, 1}, ClassParams{2, 2, 2, 2}}) {
    VarRegistry reg(p);
    OrderPtr order = reg.default_order();
    GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<uint32_t> var(0, reg.num_vars() - 1);
    for (int i = 0; i < 40; ++i) {
      std::vector<Polynomial::Term> terms;
      for (int t = 0; t < 5; ++t) {
        std::vector<std::pair<uint32_t, uint32_t>> exps;
        for (int v = 0; v < 3; ++v) exps.emplace_back(var(rng), 1);
        terms.push_back({Monomial::from_pairs(std::move(exps)),
                         RadicalScalar(Rational(coeff(rng)))});
      }
      Polynomial f = Polynomial::from_terms(order, std::move(terms));
      CHECK(is_member(f, gb) == vanishes_on_variety(f, reg));
    }
  }
}
