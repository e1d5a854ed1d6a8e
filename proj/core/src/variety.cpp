#include "vizsos/variety.hpp"

#include <algorithm>

#include "vizsos/model.hpp"

namespace vizsos {

bool dominates(const GraphInstance& graph, uint32_t subset) {
  for (int v = 0; v < graph.n; ++v) {
    if ((subset >> v) & 1u) continue;
    if ((graph.adj[v] & subset) == 0) return false;
  }
  return true;
}

int domination_number(const GraphInstance& graph, const VarietyGuards& guards) {
  if (graph.n < 1) throw ValidationError("domination number needs n >= 1");
  if (graph.n > guards.max_domination_vertices)
    throw GuardError("domination_number guard exceeded (n=" +
                     std::to_string(graph.n) + ")");
  for (int size = 1; size <= graph.n; ++size) {
    // All subsets of the given size, Gosper-style.
    uint32_t subset = (1u << size) - 1;
    uint32_t limit = graph.n == 32 ? 0 : (1u << graph.n);
    while (subset < limit) {
      if (dominates(graph, subset)) return size;
      uint32_t c = subset & -subset;
      uint32_t r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  return graph.n;
}

std::vector<GraphInstance> enumerate_graph_class(int n, int k,
                                                 const VarietyGuards& guards) {
  if (n < 1 || k < 1 || k > n)
    throw ValidationError("enumerate_graph_class: need 1 <= k <= n");
  if (n > guards.max_graph_vertices)
    throw GuardError("enumerate_graph_class guard exceeded (n=" +
                     std::to_string(n) + ")");
  const uint32_t d_mask = (1u << k) - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  std::vector<GraphInstance> out;
  const uint64_t total = 1ull << pairs.size();
  for (uint64_t bits = 0; bits < total; ++bits) {
    GraphInstance g;
    g.n = n;
    g.k = k;
    g.adj.assign(n, 0);
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((bits >> i) & 1ull) g.add_edge(pairs[i].first, pairs[i].second);
    if (!dominates(g, d_mask)) continue;
    // No (k-1)-subset may dominate; subsets of smaller size are covered
    // because supersets of dominating sets dominate.
    bool smaller = false;
    if (k >= 1) {
      uint32_t limit = 1u << n;
      for (uint32_t s = 0; s < limit && !smaller; ++s) {
        if (__builtin_popcount(s) != k - 1) continue;
        if (dominates(g, s)) smaller = true;
      }
    }
    if (!smaller) out.push_back(g);
  }
  return out;
}

GraphInstance box_product(const GraphInstance& G, const GraphInstance& H) {
  GraphInstance b;
  b.n = G.n * H.n;
  b.k = 1;
  b.adj.assign(b.n, 0);
  for (int g = 0; g < G.n; ++g)
    for (int h = 0; h < H.n; ++h) {
      for (int h2 = h + 1; h2 < H.n; ++h2)
        if (H.has_edge(h, h2)) b.add_edge(g * H.n + h, g * H.n + h2);
      for (int g2 = g + 1; g2 < G.n; ++g2)
        if (G.has_edge(g, g2)) b.add_edge(g * H.n + h, g2 * H.n + h);
    }
  return b;
}

std::vector<uint8_t> encode_point(const VarRegistry& reg,
                                  const GraphInstance& G,
                                  const GraphInstance& H, uint32_t box_set) {
  const ClassParams& p = reg.params();
  std::vector<uint8_t> a(reg.num_vars(), 0);
  for (int g = 0; g < p.nG; ++g)
    for (int g2 = g + 1; g2 < p.nG; ++g2)
      a[reg.e_G(g, g2)] = G.has_edge(g, g2) ? 1 : 0;
  for (int h = 0; h < p.nH; ++h)
    for (int h2 = h + 1; h2 < p.nH; ++h2)
      a[reg.e_H(h, h2)] = H.has_edge(h, h2) ? 1 : 0;
  for (int g = 0; g < p.nG; ++g)
    for (int h = 0; h < p.nH; ++h)
      a[reg.x(g, h)] = (box_set >> (g * p.nH + h)) & 1u;
  return a;
}

VarietyPoint decode_point(const VarRegistry& reg,
                          const std::vector<uint8_t>& assignment) {
  const ClassParams& p = reg.params();
  VarietyPoint pt;
  pt.assignment = assignment;
  pt.G.n = p.nG;
  pt.G.k = p.kG;
  pt.G.adj.assign(p.nG, 0);
  pt.H.n = p.nH;
  pt.H.k = p.kH;
  pt.H.adj.assign(p.nH, 0);
  for (int g = 0; g < p.nG; ++g)
    for (int g2 = g + 1; g2 < p.nG; ++g2)
      if (assignment[reg.e_G(g, g2)]) pt.G.add_edge(g, g2);
  for (int h = 0; h < p.nH; ++h)
    for (int h2 = h + 1; h2 < p.nH; ++h2)
      if (assignment[reg.e_H(h, h2)]) pt.H.add_edge(h, h2);
  for (int g = 0; g < p.nG; ++g)
    for (int h = 0; h < p.nH; ++h)
      if (assignment[reg.x(g, h)])
        pt.box_dominating_set |= 1u << (g * p.nH + h);
  return pt;
}

std::vector<VarietyPoint> enumerate_variety(const VarRegistry& reg,
                                            const VarietyGuards& guards) {
  const ClassParams& p = reg.params();
  if (p.nG * p.nH > guards.max_box_vertices)
    throw GuardError("enumerate_variety guard exceeded (nG*nH=" +
                     std::to_string(p.nG * p.nH) + ")");
  auto Gs = enumerate_graph_class(p.nG, p.kG, guards);
  auto Hs = enumerate_graph_class(p.nH, p.kH, guards);

  std::vector<VarietyPoint> pts;
  for (const auto& G : Gs)
    for (const auto& H : Hs) {
      GraphInstance box = box_product(G, H);
      const uint32_t limit = 1u << box.n;
      // Dominating sets of any size, matching the variety bijection.
      for (uint32_t s = 0; s < limit; ++s) {
        if (!dominates(box, s)) continue;
        VarietyPoint pt;
        pt.assignment = encode_point(reg, G, H, s);
        pt.G = G;
        pt.H = H;
        pt.box_dominating_set = s;
        pts.push_back(std::move(pt));
      }
    }
  std::sort(pts.begin(), pts.end(),
            [](const VarietyPoint& a, const VarietyPoint& b) {
              return a.assignment < b.assignment;
            });
  return pts;
}

bool vanishes_on_variety(const Polynomial& f, const VarRegistry& reg,
                         const VarietyGuards& guards) {
  auto pts = enumerate_variety(reg, guards);
  for (const auto& pt : pts)
    if (!f.evaluate01(pt.assignment).is_zero()) return false;
  return true;
}

long min_fviz_on_variety(const VarRegistry& reg, const VarietyGuards& guards) {
  auto pts = enumerate_variety(reg, guards);
  if (pts.empty()) throw ValidationError("empty variety");
  const ClassParams& p = reg.params();
  long best = 0;
  bool first = true;
  for (const auto& pt : pts) {
    long value = __builtin_popcount(pt.box_dominating_set) -
                 static_cast<long>(p.kG) * p.kH;
    if (first || value < best) best = value;
    first = false;
  }
  return best;
}

}  // namespace vizsos
