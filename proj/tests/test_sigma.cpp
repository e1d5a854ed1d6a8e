#include <doctest.h>

#include <random>

#include "vizsos/groebner.hpp"
#include "vizsos/model.hpp"
#include "vizsos/sigma.hpp"

using namespace vizsos;

namespace {

NHPoly nh() { return NHPoly::symbol(); }
NHPoly c(long num, long den = 1) {
  return NHPoly(RadicalScalar(make_rational(num, den)));
}

}  // namespace

TEST_CASE("product rule closed forms") {
  {
    SigmaPoly r = sigma_product_rule(1, 1);
    CHECK(r.coefficient(1) == c(1));
    CHECK(r.coefficient(2) == c(2));
    CHECK(r.coefficient(3).is_zero());
  }
  {
    SigmaPoly r = sigma_product_rule(2, 1);
    CHECK(r.coefficient(2) == c(2));
    CHECK(r.coefficient(3) == c(3));
  }
  {
    SigmaPoly r = sigma_product_rule(2, 2);
    CHECK(r.coefficient(2) == c(1));
    CHECK(r.coefficient(3) == c(6));
    CHECK(r.coefficient(4) == c(6));
  }
}

TEST_CASE("degree rule closed forms") {
  {
    // sigma_2 for d=1: -(1/2) nH(nH-1) + (nH-1) sigma_1
    SigmaPoly r = sigma_degree_rule(1, 0);
    CHECK(r.coefficient(0) == (nh() * (nh() - c(1))).scaled(
                                  RadicalScalar(make_rational(-1, 2))));
    CHECK(r.coefficient(1) == nh() - c(1));
  }
  {
    // sigma_3 for d=2.
    SigmaPoly r = sigma_degree_rule(2, 0);
    CHECK(r.coefficient(0) ==
          (nh() * (nh() - c(1)) * (nh() - c(2))).scaled(
              RadicalScalar(make_rational(1, 6))));
    CHECK(r.coefficient(1) ==
          ((nh() - c(1)) * (nh() - c(2))).scaled(
              RadicalScalar(make_rational(-1, 2))));
    CHECK(r.coefficient(2) == nh() - c(2));
  }
  {
    // One application on sigma_4 (d=2, j=1) lowers to sigma_1..sigma_3.
    SigmaPoly r = sigma_degree_rule(2, 1);
    CHECK(r.coefficient(1) ==
          ((nh() - c(1)) * (nh() - c(2)) * (nh() - c(3)))
              .scaled(RadicalScalar(make_rational(1, 24))));
    CHECK(r.coefficient(3) ==
          (nh() - c(3)).scaled(RadicalScalar(make_rational(3, 4))));
  }
  {
    // Fully reduced sigma_4 for d=2, leading term (1/8) nH(nH-1)(nH-2)(nH-3).
    ReducedSigmaForm f = reduce_canonical(SigmaPoly::sigma(4), 2);
    CHECK(f.phi[0] ==
          (nh() * (nh() - c(1)) * (nh() - c(2)) * (nh() - c(3)))
              .scaled(RadicalScalar(make_rational(1, 8))));
    CHECK(f.phi[1] ==
          ((nh() - c(1)) * (nh() - c(2)) * (nh() - c(3)))
              .scaled(RadicalScalar(make_rational(-1, 3))));
    CHECK(f.phi[2] ==
          ((nh() - c(2)) * (nh() - c(3))).scaled(
              RadicalScalar(make_rational(1, 2))));
  }
}

TEST_CASE("canonical reduction of the squared sums") {
  {
    // sigma_1^2 with d=1.
    ReducedSigmaForm f =
        reduce_canonical(SigmaPoly::sigma_product(1, 1), 1);
    CHECK(f.phi[0] == (nh() * (nh() - c(1))).scaled(RadicalScalar(-1L)));
    CHECK(f.phi[1] == c(2) * nh() - c(1));
  }
  {
    // sigma_2^2 with d=2: phi_0 = (1/4)(3nH-5)nH(nH-1)(nH-2).
    ReducedSigmaForm f =
        reduce_canonical(SigmaPoly::sigma_product(2, 2), 2);
    CHECK(f.phi[0] ==
          ((c(3) * nh() - c(5)) * nh() * (nh() - c(1)) * (nh() - c(2)))
              .scaled(RadicalScalar(make_rational(1, 4))));
    CHECK(f.phi[1] ==
          ((c(2) * nh() - c(3)) * (nh() - c(1)) * (nh() - c(2)))
              .scaled(RadicalScalar(-1L)));
    CHECK(f.phi[2] == c(1) + (nh() - c(1)) * (nh() - c(2)) * c(3));
  }
  {
    // sigma_2 sigma_1 with d=2.
    ReducedSigmaForm f =
        reduce_canonical(SigmaPoly::sigma_product(2, 1), 2);
    CHECK(f.phi[0] ==
          (nh() * (nh() - c(1)) * (nh() - c(2)))
              .scaled(RadicalScalar(make_rational(1, 2))));
    CHECK(f.phi[1] ==
          ((nh() - c(1)) * (nh() - c(2))).scaled(
              RadicalScalar(make_rational(-3, 2))));
    CHECK(f.phi[2] == c(3) * nh() - c(4));
  }
  {
    // The unit reduces to phi_0 = 1 for any d.
    for (int d : {0, 1, 2, 3}) {
      ReducedSigmaForm f = reduce_canonical(SigmaPoly::unit(), d);
      CHECK(f.phi[0] == c(1));
      for (int i = 1; i <= d; ++i) CHECK(f.phi[i].is_zero());
    }
  }
  {
    // d = 0: sigma_1 collapses to nH.
    ReducedSigmaForm f = reduce_canonical(SigmaPoly::sigma(1), 0);
    CHECK(f.phi[0] == nh());
  }
}

TEST_CASE("sigma expansion instances") {
  VarRegistry reg({2, 2, 3, 1});
  OrderPtr order = reg.default_order();
  Polynomial s1 = expand_sigma_instance(0, 1, reg, order);
  CHECK(s1.term_count() == 3);
  CHECK(s1.degree() == 1);
  Polynomial s2 = expand_sigma_instance(0, 2, reg, order);
  CHECK(s2.term_count() == 3);
  CHECK(s2.degree() == 2);
  CHECK(expand_sigma_instance(0, 4, reg, order).is_zero());
  Polynomial s0 = expand_sigma_instance(0, 0, reg, order);
  CHECK(s0 == Polynomial::constant(order, RadicalScalar(1)));
}

TEST_CASE("product rule is a concrete polynomial identity") {
  for (int nH : {3, 4, 5}) {
    VarRegistry reg({1, 1, nH, 1});
    OrderPtr order = reg.default_order();
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= i; ++j) {
        Polynomial lhs = boolean_expand(
            expand_sigma_instance(0, i, reg, order) *
            expand_sigma_instance(0, j, reg, order));
        Polynomial rhs = Polynomial::zero(order);
        SigmaPoly rule = sigma_product_rule(i, j);
        for (const auto& [k, coeff] : rule.linear()) {
          RadicalScalar at = coeff.evaluate(Rational(nH));
          rhs = rhs + expand_sigma_instance(0, k, reg, order).scaled(at);
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("degree rule vanishes modulo the class ideal") {
  for (int d : {1, 2}) {
    for (int nG : {1, 2}) {
      for (int nH = d + 1; nH <= 4; ++nH) {
        ClassParams p{nG, nG, nH, nH - d};
        VarRegistry reg(p);
        OrderPtr order = reg.default_order();
        GroebnerBasis gb = buchberger(build_I_viz(reg, order), order);
        Polynomial lhs = expand_sigma_instance(0, d + 1, reg, order);
        SigmaPoly rule = sigma_degree_rule(d, 0);
        for (const auto& [k, coeff] : rule.linear()) {
          RadicalScalar at = coeff.evaluate(Rational(nH));
          lhs = lhs - expand_sigma_instance(0, k, reg, order).scaled(at);
        }
        CHECK(normal_form(lhs, gb).is_zero());
      }
    }
  }
}

TEST_CASE("reduction is idempotent and linear") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> idx(0, 4);
  auto random_sigma = [&]() {
    SigmaPoly s;
    for (int t = 0; t < 3; ++t)
      s.add_sigma(idx(rng), NHPoly(RadicalScalar(Rational(coeff(rng)))));
    for (int t = 0; t < 2; ++t)
      s.add_product(idx(rng), idx(rng),
                    NHPoly(RadicalScalar(Rational(coeff(rng)))));
    return s;
  };
  for (int d : {1, 2, 3}) {
    for (int trial = 0; trial < 15; ++trial) {
      SigmaPoly x = random_sigma();
      SigmaPoly y = random_sigma();
      ReducedSigmaForm fx = reduce_canonical(x, d);
      ReducedSigmaForm fy = reduce_canonical(y, d);

      // Idempotence: reducing the canonical form changes nothing.
      SigmaPoly back;
      for (int i = 0; i <= d; ++i) back.add_sigma(i, fx.phi[i]);
      ReducedSigmaForm again = reduce_canonical(back, d);
      for (int i = 0; i <= d; ++i) CHECK(again.phi[i] == fx.phi[i]);

      // Linearity.
      NHPoly a(RadicalScalar(Rational(coeff(rng))));
      NHPoly b(RadicalScalar(Rational(coeff(rng))));
      ReducedSigmaForm combo =
          reduce_canonical(x.scaled(a) + y.scaled(b), d);
      for (int i = 0; i <= d; ++i)
        CHECK(combo.phi[i] == fx.phi[i] * a + fy.phi[i] * b);
    }
  }
}

TEST_CASE("reduce then substitute equals substitute then reduce") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> idx(0, 4);
  for (int d : {0, 1, 2}) {
    for (int trial = 0; trial < 10; ++trial) {
      SigmaPoly x;
      for (int t = 0; t < 3; ++t)
        x.add_sigma(idx(rng), NHPoly(RadicalScalar(Rational(coeff(rng)))));
      x.add_product(idx(rng), idx(rng),
                    NHPoly(RadicalScalar(Rational(coeff(rng)))));
      ReducedSigmaForm symbolic = reduce_canonical(x, d);
      for (long m = d + 1; m <= d + 4; ++m) {
        auto numeric = reduce_canonical_at(x, d, m);
        for (int i = 0; i <= d; ++i)
          CHECK(symbolic.phi[i].evaluate(Rational(m)) == numeric[i]);
      }
    }
  }
}
