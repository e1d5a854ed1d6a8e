#include <doctest.h>

#include <random>

#include "vizsos/polynomial.hpp"
#include "vizsos/radical.hpp"

using namespace vizsos;

namespace {

RadicalScalar rt(long k) { return RadicalScalar::sqrt_term(1, k); }

RadicalScalar random_radical(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  static const long radicands[] = {1, 2, 3, 5, 6};
  RadicalScalar v;
  for (long m : radicands) {
    int n = num(rng);
    if (n != 0) v += RadicalScalar::sqrt_term(make_rational(n, den(rng)), m);
  }
  return v;
}

}  // namespace

TEST_CASE("radical multiplication basics") {
  CHECK(rt(2) * rt(2) == RadicalScalar(2));
  CHECK(rt(2) * rt(3) == rt(6));
  // (2 + sqrt(2))^2 = 6 + 4 sqrt(2)
  RadicalScalar v = RadicalScalar(2) + rt(2);
  RadicalScalar sq = v * v;
  CHECK(sq == RadicalScalar(6) + RadicalScalar::sqrt_term(Rational(4), 2));
  // sqrt(a) sqrt(b) = g sqrt(ab/g^2)
  CHECK(rt(6) * rt(10) == RadicalScalar::sqrt_term(Rational(2), 15));
}

TEST_CASE("sqrt of rational extracts square factors") {
  CHECK(RadicalScalar::sqrt_of_rational(make_rational(4, 9)) ==
        RadicalScalar(make_rational(2, 3)));
  CHECK(RadicalScalar::sqrt_of_rational(Rational(2)) == rt(2));
  // sqrt(3/2) = sqrt(6)/2
  CHECK(RadicalScalar::sqrt_of_rational(make_rational(3, 2)) ==
        RadicalScalar::sqrt_term(make_rational(1, 2), 6));
  CHECK(RadicalScalar::sqrt_of_rational(Rational(0)).is_zero());
  CHECK_THROWS_AS(RadicalScalar::sqrt_of_rational(Rational(-1)),
                  ValidationError);
}

TEST_CASE("radicands stay squarefree and canonical") {
  RadicalScalar v = RadicalScalar::sqrt_term(Rational(1), 12);
  CHECK(v == RadicalScalar::sqrt_term(Rational(2), 3));
  for (const auto& [m, q] : v.terms()) {
    auto [s, sf] = extract_square_part(Integer(m));
    CHECK(s == 1);
    CHECK(q != 0);
  }
  RadicalScalar zero = rt(2) - rt(2);
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
}

TEST_CASE("ring laws hold exactly on random values") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    RadicalScalar a = random_radical(rng);
    RadicalScalar b = random_radical(rng);
    RadicalScalar c = random_radical(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    CHECK(a * b == b * a);
  }
}

TEST_CASE("single radical term squares to a rational") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 4);
  static const long radicands[] = {1, 2, 3, 5, 6};
  for (int i = 0; i < 20; ++i) {
    RadicalScalar x =
        RadicalScalar::sqrt_term(make_rational(pick(rng) - 2, 1 + pick(rng)),
                                 radicands[pick(rng)]);
    CHECK((x * x).is_rational());
  }
}

TEST_CASE("inverse is exact") {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    RadicalScalar a = random_radical(rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == RadicalScalar(1));
  }
  CHECK_THROWS_AS(RadicalScalar().inverse(), ValidationError);
}

TEST_CASE("numeric embedding agrees with exact arithmetic") {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    RadicalScalar a = random_radical(rng);
    RadicalScalar b = random_radical(rng);
    double lhs = (a * b).to_double();
    double rhs = a.to_double() * b.to_double();
    CHECK(std::abs(lhs - rhs) <=
          1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }
}

TEST_CASE("polynomial arithmetic basics") {
  OrderPtr order = make_order(MonomialOrder::Kind::degrevlex, 3);
  Polynomial z1 = Polynomial::variable(order, 0);
  Polynomial z2 = Polynomial::variable(order, 1);
  Polynomial one = Polynomial::constant(order, RadicalScalar(1));

  // (z1 - z2)^2 = z1^2 - 2 z1 z2 + z2^2
  Polynomial diff = z1 - z2;
  Polynomial sq = diff * diff;
  CHECK(sq.term_count() == 3);
  CHECK(sq == z1 * z1 - (z1 * z2).scaled(RadicalScalar(2)) + z2 * z2);

  Polynomial p = z1 * z2 - one;
  CHECK((p + (-p)).is_zero());
  CHECK((z1 + one) * (z1 - one) == z1 * z1 - one);
}

TEST_CASE("mismatched universes are a structural error") {
  OrderPtr a = make_order(MonomialOrder::Kind::degrevlex, 2);
  OrderPtr b = make_order(MonomialOrder::Kind::degrevlex, 3);
  Polynomial pa = Polynomial::variable(a, 0);
  Polynomial pb = Polynomial::variable(b, 0);
  CHECK_THROWS_AS(pa + pb, StructuralError);
}

TEST_CASE("boolean expand") {
  OrderPtr order = make_order(MonomialOrder::Kind::degrevlex, 2);
  Polynomial x = Polynomial::variable(order, 0);
  Polynomial y = Polynomial::variable(order, 1);

  CHECK(boolean_expand(x * x) == x);
  // x^2 y^3 + x -> xy + x
  Polynomial p = x * x * y * y * y + x;
  CHECK(boolean_expand(p) == x * y + x);
  CHECK(boolean_expand(x - x * x).is_zero());
}

TEST_CASE("boolean expand is idempotent and multiplicative") {
  std::mt19937 rng(23);
  OrderPtr order = make_order(MonomialOrder::Kind::degrevlex, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<uint32_t> var(0, 3);
  std::uniform_int_distribution<uint32_t> exp(1, 3);
  auto random_poly = [&]() {
    std::vector<Polynomial::Term> terms;
    for (int t = 0; t < 5; ++t) {
      std::vector<std::pair<uint32_t, uint32_t>> exps;
      for (int v = 0; v < 2; ++v) exps.emplace_back(var(rng), exp(rng));
      terms.push_back({Monomial::from_pairs(std::move(exps)),
                       RadicalScalar(Rational(coeff(rng)))});
    }
    return Polynomial::from_terms(order, std::move(terms));
  };
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_poly();
    Polynomial q = random_poly();
    CHECK(boolean_expand(boolean_expand(p)) == boolean_expand(p));
    CHECK(boolean_expand(p * q) ==
          boolean_expand(boolean_expand(p) * boolean_expand(q)));
  }
}

TEST_CASE("degrevlex orders by degree then reversed weakest variable") {
  OrderPtr order = make_order(MonomialOrder::Kind::degrevlex, 3);
  Monomial a = Monomial::variable(0);  // strongest variable
  Monomial c = Monomial::variable(2);
  CHECK(order->greater(a, c));
  // degree dominates
  CHECK(order->greater(c * c, a));
  // a*b vs c^2: same degree; c^2 has the larger exponent on the weakest var
  Monomial ab = Monomial::variable(0) * Monomial::variable(1);
  CHECK(order->greater(ab, c * c));
}

TEST_CASE("lex order") {
  OrderPtr order = make_order(MonomialOrder::Kind::lex, 2);
  Monomial x = Monomial::variable(0);
  Monomial y = Monomial::variable(1);
  CHECK(order->greater(x, y * y));
  CHECK(order->greater(x * y, x));
}
