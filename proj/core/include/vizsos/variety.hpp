#pragma once

#include <cstdint>
#include <vector>

#include "vizsos/polynomial.hpp"
#include "vizsos/registry.hpp"

namespace vizsos {

// Labelled graph with a fixed dominating set D = first k labels. The class
// enumerators only emit instances where D dominates and no (k-1)-subset
// dominates, i.e. gamma = k with D minimum.
struct GraphInstance {
  int n = 0;
  int k = 0;
  // Adjacency as bitmasks, closed neighbourhoods not included.
  std::vector<uint32_t> adj;

  bool has_edge(int a, int b) const { return (adj[a] >> b) & 1u; }
  void add_edge(int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
};

struct VarietyGuards {
  int max_graph_vertices = 6;   // enumerate_graph_class
  int max_box_vertices = 12;    // enumerate_variety: nG*nH
  int max_domination_vertices = 20;
};

// 0/1 assignment per variable of the registry plus its decoded triple.
struct VarietyPoint {
  std::vector<uint8_t> assignment;
  GraphInstance G;
  GraphInstance H;
  uint32_t box_dominating_set = 0;  // bitmask over nG*nH vertices, g*nH+h
};

// Exact gamma by subset enumeration (n <= guard).
int domination_number(const GraphInstance& graph,
                      const VarietyGuards& guards = {});

// Whether the given vertex set dominates the graph.
bool dominates(const GraphInstance& graph, uint32_t subset);

// All labelled graphs on n vertices with gamma = k and the fixed dominating
// set D = first k labels both dominating and minimum.
std::vector<GraphInstance> enumerate_graph_class(
    int n, int k, const VarietyGuards& guards = {});

// Cartesian product graph on nG*nH vertices, vertex (g,h) at index g*nH+h.
GraphInstance box_product(const GraphInstance& G, const GraphInstance& H);

// All variety points: (G, H, any dominating set of the box graph), encoded
// as 0/1 assignments, sorted by encoded assignment.
std::vector<VarietyPoint> enumerate_variety(const VarRegistry& reg,
                                            const VarietyGuards& guards = {});

std::vector<uint8_t> encode_point(const VarRegistry& reg,
                                  const GraphInstance& G,
                                  const GraphInstance& H, uint32_t box_set);
VarietyPoint decode_point(const VarRegistry& reg,
                          const std::vector<uint8_t>& assignment);

// True iff f evaluates to exactly zero at every point.
bool vanishes_on_variety(const Polynomial& f, const VarRegistry& reg,
                         const VarietyGuards& guards = {});

// Minimum of f_viz over the variety; Vizing holds for the class iff >= 0.
long min_fviz_on_variety(const VarRegistry& reg,
                         const VarietyGuards& guards = {});

}  // namespace vizsos
