#include <doctest.h>

#include "vizsos/model.hpp"
#include "vizsos/variety.hpp"

using namespace vizsos;

namespace {

int count_tag(const GeneratorSet& gens, const std::string& tag) {
  int n = 0;
  for (const auto& g : gens.gens)
    if (g.tag == tag) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph ideal generator counts") {
  {
    VarRegistry reg({1, 1, 1, 1});
    auto gens = build_I_G(reg, Side::G, reg.default_order());
    CHECK(gens.gens.empty());
  }
  {
    VarRegistry reg({3, 2, 1, 1});
    auto gens = build_I_G(reg, Side::G, reg.default_order());
    CHECK(gens.gens.size() == 7);
    CHECK(count_tag(gens, "boolean-e") == 3);
    CHECK(count_tag(gens, "domset-G") == 1);
    CHECK(count_tag(gens, "kcover-G") == 3);
  }
  {
    VarRegistry reg({2, 2, 1, 1});
    auto gens = build_I_G(reg, Side::G, reg.default_order());
    CHECK(count_tag(gens, "boolean-e") == 1);
    CHECK(count_tag(gens, "domset-G") == 0);
    CHECK(count_tag(gens, "kcover-G") == 2);
  }
}

TEST_CASE("(2,2) graph side cuts the variety to the edgeless graph") {
  // Every generator vanishes exactly at e = 0.
  VarRegistry reg({2, 2, 1, 1});
  auto gens = build_I_G(reg, Side::G, reg.default_order());
  std::vector<uint8_t> on = {1, 0};
  std::vector<uint8_t> off = {0, 0};
  bool on_ok = true, off_ok = true;
  for (const auto& g : gens.gens) {
    on_ok = on_ok && g.poly.evaluate01(on).is_zero();
    off_ok = off_ok && g.poly.evaluate01(off).is_zero();
  }
  CHECK(!on_ok);
  CHECK(off_ok);
}

TEST_CASE("I_viz generator and variable counts") {
  {
    VarRegistry reg({3, 2, 3, 2});
    CHECK(reg.num_vars() == 15);
    auto gens = build_I_viz(reg);
    CHECK(gens.gens.size() == 32);
  }
  {
    VarRegistry reg({2, 2, 2, 2});
    CHECK(reg.num_vars() == 6);
    auto gens = build_I_viz(reg);
    CHECK(gens.gens.size() == 14);
    CHECK(count_tag(gens, "boolean-x") == 4);
    CHECK(count_tag(gens, "domset-box") == 4);
  }
  {
    VarRegistry reg({1, 1, 1, 1});
    CHECK(reg.num_vars() == 1);
    auto gens = build_I_viz(reg);
    CHECK(gens.gens.size() == 2);
  }
}

TEST_CASE("f_viz shape") {
  {
    VarRegistry reg({3, 2, 3, 2});
    Polynomial f = build_f_viz(reg);
    CHECK(f.term_count() == 10);  // 9 x-variables and the constant -4
    CHECK(f.degree() == 1);
  }
  {
    VarRegistry reg({1, 1, 1, 1});
    Polynomial f = build_f_viz(reg);
    CHECK(f.term_count() == 2);
  }
  {
    VarRegistry reg({2, 2, 2, 1});
    Polynomial f = build_f_viz(reg);
    // constant is -kG*kH = -2
    RadicalScalar c;
    for (const auto& t : f.terms())
      if (t.monomial.is_one()) c = t.coeff;
    CHECK(c == RadicalScalar(-2));
  }
}

TEST_CASE("generators vanish exactly on the enumerated variety") {
  for (ClassParams p : {ClassParams{2, 1, 2, 1}, ClassParams{2, 2, 2, 2},
                        ClassParams{3, 2, 2, 1}}) {
    VarRegistry reg(p);
    auto gens = build_I_viz(reg);
    auto points = enumerate_variety(reg);
    REQUIRE(!points.empty());
    for (const auto& pt : points)
      for (const auto& g : gens.gens)
        CHECK(g.poly.evaluate01(pt.assignment).is_zero());
  }
}

TEST_CASE("bijection: variety points = 0/1 solutions of the generators") {
  for (ClassParams p :
       {ClassParams{2, 1, 2, 1}, ClassParams{2, 2, 2, 2},
        ClassParams{2, 1, 2, 2}, ClassParams{3, 2, 3, 2},
        ClassParams{3, 1, 2, 2}, ClassParams{3, 3, 3, 1}}) {
    VarRegistry reg(p);
    auto gens = build_I_viz(reg);
    auto points = enumerate_variety(reg);
    // Independent enumeration: every 0/1 assignment against every generator.
    size_t count = 0;
    const uint32_t n = reg.num_vars();
    for (uint64_t bits = 0; bits < (1ull << n); ++bits) {
      std::vector<uint8_t> a(n);
      for (uint32_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1;
      bool zero = true;
      for (const auto& g : gens.gens)
        if (!g.poly.evaluate01(a).is_zero()) {
          zero = false;
          break;
        }
      if (zero) ++count;
    }
    CHECK(count == points.size());
  }
}

TEST_CASE("non-boolean generators are already squarefree") {
  VarRegistry reg({3, 2, 3, 2});
  auto gens = build_I_viz(reg);
  for (const auto& g : gens.gens) {
    if (g.tag == "boolean-e" || g.tag == "boolean-eH" || g.tag == "boolean-x")
      continue;
    CHECK(boolean_expand(g.poly) == g.poly);
  }
}

TEST_CASE("f_viz at a variety point is |D| - kG*kH") {
  VarRegistry reg({2, 2, 2, 1});
  Polynomial f = build_f_viz(reg);
  for (const auto& pt : enumerate_variety(reg)) {
    long expect = __builtin_popcount(pt.box_dominating_set) -
                  reg.params().kG * reg.params().kH;
    CHECK(f.evaluate01(pt.assignment) == RadicalScalar(Rational(expect)));
  }
}
