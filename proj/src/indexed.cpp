#include "dg/detail/indexed.hpp"

#include <algorithm>

#include "dg/error.hpp"
#include "dg/validate.hpp"

namespace dg::detail {

int Indexed::vertex(std::string_view name) const {
  auto it = vertex_index.find(name);
  if (it == vertex_index.end()) throw LookupError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

Indexed index_graph(const DistinguishingGraph& g) {
  require_valid(g);
  return index_valid_graph(g);
}

Indexed index_valid_graph(const DistinguishingGraph& input) {
  const DistinguishingGraph g = canonical_order(input);
  Indexed ix;
  ix.level_count = g.level_count();

  for (const auto& l : g.levels) {
    for (const auto& v : l.vertices) {
      ix.vertex_index.emplace(v, static_cast<int>(ix.vertex_name.size()));
      ix.vertex_name.push_back(v);
      ix.vertex_level.push_back(l.index);
    }
  }
  ix.degree.assign(ix.vertex_name.size(), 0);
  for (const auto& l : g.levels) {
    for (const auto& e : l.edges) {
      ix.edge_index.emplace(e.name, static_cast<int>(ix.edge_name.size()));
      ix.edge_name.push_back(e.name);
      IxEdge ie{ix.vertex_index.at(e.tail), ix.vertex_index.at(e.head), l.index};
      ix.degree[ie.tail] += 1;
      ix.degree[ie.head] += 1;
      ix.edges.push_back(ie);
    }
  }
  ix.edge_cycle.assign(ix.edges.size(), {-1, -1});
  ix.edge_pos.assign(ix.edges.size(), {-1, -1});
  for (const auto& c : g.cycles) {
    const int ci = static_cast<int>(ix.cycle_name.size());
    ix.cycle_index.emplace(c.id, ci);
    ix.cycle_name.push_back(c.id);
    IxCycle cy{c.level, c.role, {}, -1};
    if (c.is_point()) cy.anchor = ix.vertex_index.at(c.anchor);
    for (std::size_t j = 0; j < c.body.size(); ++j) {
      const int e = ix.edge_index.at(c.body[j].edge);
      cy.body.push_back({e, c.body[j].direction});
      ix.edge_cycle[e][role_slot(c.role)] = ci;
      ix.edge_pos[e][role_slot(c.role)] = static_cast<int>(j);
    }
    ix.cycles.push_back(std::move(cy));
  }
  ix.partner.assign(ix.cycles.size(), -1);
  for (const auto& p : g.pairings) {
    const int a = ix.cycle_index.at(p.lower);
    const int b = ix.cycle_index.at(p.upper);
    ix.partner[a] = b;
    ix.partner[b] = a;
  }
  return ix;
}

}  // namespace dg::detail
