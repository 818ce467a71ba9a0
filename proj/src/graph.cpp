#include "dg/graph.hpp"

#include <algorithm>
#include <tuple>

namespace dg {

std::string_view to_string(Role r) { return r == Role::Lower ? "lower" : "upper"; }

const Cycle* DistinguishingGraph::find_cycle(std::string_view id) const {
  for (const auto& c : cycles)
    if (c.id == id) return &c;
  return nullptr;
}

const Edge* DistinguishingGraph::find_edge(std::string_view name) const {
  for (const auto& l : levels)
    for (const auto& e : l.edges)
      if (e.name == name) return &e;
  return nullptr;
}

int DistinguishingGraph::vertex_level(std::string_view name) const {
  for (const auto& l : levels)
    if (std::find(l.vertices.begin(), l.vertices.end(), name) != l.vertices.end()) return l.index;
  return 0;
}

DistinguishingGraph canonical_order(DistinguishingGraph g) {
  std::stable_sort(g.levels.begin(), g.levels.end(),
                   [](const LevelGraph& a, const LevelGraph& b) { return a.index < b.index; });
  for (auto& l : g.levels) {
    std::sort(l.vertices.begin(), l.vertices.end());
    std::sort(l.edges.begin(), l.edges.end());
  }
  std::sort(g.cycles.begin(), g.cycles.end(), [](const Cycle& a, const Cycle& b) {
    return std::tie(a.level, a.role, a.id) < std::tie(b.level, b.role, b.id);
  });
  std::sort(g.pairings.begin(), g.pairings.end());
  return g;
}

bool same_graph(const DistinguishingGraph& a, const DistinguishingGraph& b) {
  return canonical_order(a) == canonical_order(b);
}

}  // namespace dg
