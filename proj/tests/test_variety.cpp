#include <doctest.h>

#include "vizsos/model.hpp"
#include "vizsos/variety.hpp"

using namespace vizsos;

namespace {

GraphInstance cycle(int n) {
  GraphInstance g;
  g.n = n;
  g.k = 0;
  g.adj.assign(n, 0);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("domination numbers of small graphs") {
  GraphInstance single;
  single.n = 1;
  single.adj = {0};
  CHECK(domination_number(single) == 1);

  GraphInstance c4 = cycle(4);
  CHECK(domination_number(c4) == 2);

  GraphInstance box = box_product(c4, cycle(4));
  CHECK(box.n == 16);
  CHECK(domination_number(box) == 4);
}

TEST_CASE("domination guard") {
  GraphInstance big;
  big.n = 21;
  big.adj.assign(21, 0);
  CHECK_THROWS_AS(domination_number(big), GuardError);
}

TEST_CASE("graph class enumeration") {
  CHECK(enumerate_graph_class(1, 1).size() == 1);
  // (2,2): any edge would give gamma 1, so only the edgeless graph remains.
  auto edgeless = enumerate_graph_class(2, 2);
  REQUIRE(edgeless.size() == 1);
  CHECK(!edgeless[0].has_edge(0, 1));
  // (2,1): D = {1} must dominate vertex 2, so only the single edge works.
  auto single_edge = enumerate_graph_class(2, 1);
  REQUIRE(single_edge.size() == 1);
  CHECK(single_edge[0].has_edge(0, 1));
  CHECK_THROWS_AS(enumerate_graph_class(7, 1), GuardError);
}

TEST_CASE("every enumerated class member has gamma = k") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& g : enumerate_graph_class(n, k))
        CHECK(domination_number(g) == k);
}

TEST_CASE("variety enumeration on degenerate classes") {
  {
    VarRegistry reg({1, 1, 1, 1});
    auto pts = enumerate_variety(reg);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].assignment == std::vector<uint8_t>{1});
  }
  {
    // Two edgeless graphs: the box graph has no edges, only the full vertex
    // set dominates.
    VarRegistry reg({2, 2, 2, 2});
    auto pts = enumerate_variety(reg);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].box_dominating_set == 0b1111u);
  }
}

TEST_CASE("decode round-trips every enumerated point") {
  for (ClassParams p : {ClassParams{2, 1, 2, 1}, ClassParams{3, 2, 2, 1},
                        ClassParams{2, 2, 3, 2}}) {
    VarRegistry reg(p);
    for (const auto& pt : enumerate_variety(reg)) {
      VarietyPoint decoded = decode_point(reg, pt.assignment);
      CHECK(encode_point(reg, decoded.G, decoded.H,
                         decoded.box_dominating_set) == pt.assignment);
    }
  }
}

TEST_CASE("vanishing oracle on the degree-reduction products") {
  {
    // kG = nG, kH = nH - 1 (d = 1): products of 2 factors vanish.
    VarRegistry reg({2, 2, 3, 2});
    OrderPtr order = reg.default_order();
    Polynomial one = Polynomial::constant(order, RadicalScalar(1));
    Polynomial f =
        (one - Polynomial::variable(order, reg.x(0, 0))) *
        (one - Polynomial::variable(order, reg.x(0, 1)));
    CHECK(vanishes_on_variety(f, reg));
  }
  {
    // Four-factor product at (3,2,3,2).
    VarRegistry reg({3, 2, 3, 2});
    OrderPtr order = reg.default_order();
    Polynomial one = Polynomial::constant(order, RadicalScalar(1));
    auto x = [&](int g, int h) {
      return Polynomial::variable(order, reg.x(g, h));
    };
    Polynomial f = (one - x(0, 0)) * (one - x(0, 1)) * (one - x(1, 1)) *
                   (one - x(1, 2));
    CHECK(vanishes_on_variety(f, reg));
  }
  {
    VarRegistry reg({2, 1, 2, 1});
    OrderPtr order = reg.default_order();
    CHECK(!vanishes_on_variety(Polynomial::variable(order, reg.x(0, 0)), reg));
  }
}

TEST_CASE("minimum of f_viz is non-negative at desk scale") {
  CHECK(min_fviz_on_variety(VarRegistry({2, 2, 2, 2})) == 0);
  CHECK(min_fviz_on_variety(VarRegistry({1, 1, 1, 1})) == 0);
  CHECK(min_fviz_on_variety(VarRegistry({3, 2, 3, 2})) >= 0);
}

TEST_CASE("variety guard") {
  VarRegistry reg({4, 2, 4, 2});
  CHECK_THROWS_AS(enumerate_variety(reg), GuardError);
}
