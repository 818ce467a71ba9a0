#include "dg/topology.hpp"

#include <algorithm>

#include "dg/detail/indexed.hpp"
#include "dg/error.hpp"

namespace dg {

using detail::Indexed;

std::string_view to_string(VertexKind k) { return k == VertexKind::Planar ? "planar" : "conic"; }

namespace {

struct Link {
  std::vector<int> ends;                     // end node ids at the vertex
  std::map<int, std::vector<int>> lower, upper;  // end -> neighbours
};

Link link_of(const Indexed& ix, int v) {
  Link link;
  for (int e = 0; e < ix.edge_count(); ++e) {
    if (ix.edges[e].tail == v) link.ends.push_back(detail::tail_end(e));
    if (ix.edges[e].head == v) link.ends.push_back(detail::head_end(e));
  }
  for (int end : link.ends) {
    link.lower[end];
    link.upper[end];
  }
  for (const auto& c : ix.cycles) {
    const std::size_t len = c.body.size();
    auto& adj = c.role == Role::Lower ? link.lower : link.upper;
    for (std::size_t j = 0; j < len; ++j) {
      const int a = detail::arrival_end(c.body[j]);
      const int b = detail::departure_end(c.body[(j + 1) % len]);
      if (!adj.contains(a)) continue;  // fragment at another vertex
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  return link;
}

std::vector<std::vector<int>> link_cycles(const Link& link) {
  std::vector<std::vector<int>> out;
  std::map<int, bool> seen;
  for (int start : link.ends) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = start;
    bool use_lower = true;
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = (use_lower ? link.lower : link.upper).at(cur).front();
      use_lower = !use_lower;
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

EdgeEnd end_of(const Indexed& ix, int node) {
  return {ix.edge_name[node / 2], node % 2 == 0 ? End::Tail : End::Head};
}

int component_count(const Indexed& ix, int v) {
  if (ix.degree[v] == 0) return 0;
  return static_cast<int>(link_cycles(link_of(ix, v)).size());
}

VertexKind kind_of(const Indexed& ix, int v) {
  // An isolated extremum is capped by a disk; its link is one circle.
  if (ix.degree[v] == 0) return VertexKind::Planar;
  return component_count(ix, v) == 1 ? VertexKind::Planar : VertexKind::Conic;
}

VertexReport report_of(const Indexed& ix, int v) {
  VertexReport r;
  r.vertex = ix.vertex_name[v];
  r.level = ix.vertex_level[v];
  r.degree = ix.degree[v];
  r.local_degree = r.degree / 2;
  r.index = 1 - r.local_degree;
  r.link_components = component_count(ix, v);
  r.kind = kind_of(ix, v);
  return r;
}

bool realizable(const Indexed& ix) {
  for (int v = 0; v < ix.vertex_count(); ++v)
    if (kind_of(ix, v) == VertexKind::Conic) return false;
  return true;
}

int euler(const Indexed& ix) {
  int chi = 0;
  for (int v = 0; v < ix.vertex_count(); ++v) chi += 1 - ix.degree[v] / 2;
  return chi;
}

// Parity union-find over edges [0, E) and cycles [E, E + C): parity[x] is
// the sign relation of x to its parent (0 equal, 1 opposite).
std::optional<OrientationAssignment> orient(const Indexed& ix) {
  const int ne = ix.edge_count();
  const int n = ne + ix.cycle_count();
  std::vector<int> parent(n), parity(n, 0);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find_rec = [&](auto&& self, int x) -> std::pair<int, int> {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = self(self, parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  };
  auto find = [&](int x) { return find_rec(find_rec, x); };
  for (int c = 0; c < ix.cycle_count(); ++c) {
    for (const auto& d : ix.cycles[c].body) {
      const int want = d.dir < 0 ? 1 : 0;
      auto [ra, pa] = find(d.edge);
      auto [rb, pb] = find(ne + c);
      if (ra == rb) {
        if ((pa ^ pb) != want) return std::nullopt;
        continue;
      }
      if (rb < ra) {
        std::swap(ra, rb);
        std::swap(pa, pb);
      }
      parent[rb] = ra;
      parity[rb] = pa ^ pb ^ want;
    }
  }
  OrientationAssignment out;
  for (int e = 0; e < ne; ++e) out.edge_direction[ix.edge_name[e]] = find(e).second ? -1 : 1;
  for (int c = 0; c < ix.cycle_count(); ++c)
    if (!ix.cycles[c].body.empty()) out.cycle_sign[ix.cycle_name[c]] = find(ne + c).second ? -1 : 1;
  return out;
}

// Nodes: vertices of every level (joined along edges into level-graph
// components); cylinders join the components holding their two end cycles.
bool connected(const Indexed& ix) {
  if (ix.vertex_count() == 0) return false;
  detail::DisjointSets ds(ix.vertex_count());
  for (const auto& e : ix.edges) ds.unite(e.tail, e.head);
  auto cycle_vertex = [&](int c) {
    const auto& cy = ix.cycles[c];
    return cy.body.empty() ? cy.anchor : ix.edges[cy.body.front().edge].tail;
  };
  for (int c = 0; c < ix.cycle_count(); ++c)
    if (ix.partner[c] >= 0) ds.unite(cycle_vertex(c), cycle_vertex(ix.partner[c]));
  const int root = ds.find(0);
  for (int v = 1; v < ix.vertex_count(); ++v)
    if (ds.find(v) != root) return false;
  return true;
}

}  // namespace

VertexReport vertex_report(const DistinguishingGraph& g, std::string_view vertex) {
  const Indexed ix = detail::index_graph(g);
  return report_of(ix, ix.vertex(vertex));
}

bool locally_equivalent(const DistinguishingGraph& g1, std::string_view v1,
                        const DistinguishingGraph& g2, std::string_view v2) {
  return vertex_report(g1, v1).index == vertex_report(g2, v2).index;
}

std::vector<EndAdjacency> vertex_link_adjacency(const DistinguishingGraph& g, std::string_view vertex) {
  const Indexed ix = detail::index_graph(g);
  const Link link = link_of(ix, ix.vertex(vertex));
  std::vector<EndAdjacency> out;
  for (int end : link.ends) {
    EndAdjacency a{end_of(ix, end), {}, {}};
    for (int n : link.lower.at(end)) a.via_lower.push_back(end_of(ix, n));
    for (int n : link.upper.at(end)) a.via_upper.push_back(end_of(ix, n));
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::vector<EdgeEnd>> vertex_link(const DistinguishingGraph& g, std::string_view vertex) {
  const Indexed ix = detail::index_graph(g);
  std::vector<std::vector<EdgeEnd>> out;
  for (const auto& cyc : link_cycles(link_of(ix, ix.vertex(vertex)))) {
    std::vector<EdgeEnd> ends;
    for (int node : cyc) ends.push_back(end_of(ix, node));
    out.push_back(std::move(ends));
  }
  return out;
}

VertexKind classify_vertex(const DistinguishingGraph& g, std::string_view vertex) {
  const Indexed ix = detail::index_graph(g);
  return kind_of(ix, ix.vertex(vertex));
}

bool is_realizable(const DistinguishingGraph& g) { return realizable(detail::index_graph(g)); }

int euler_characteristic(const DistinguishingGraph& g) { return euler(detail::index_graph(g)); }

std::optional<OrientationAssignment> orientation_assignment(const DistinguishingGraph& g) {
  const Indexed ix = detail::index_graph(g);
  if (!realizable(ix)) throw PreconditionError("orientation is only defined for realizable graphs");
  return orient(ix);
}

bool is_connected(const DistinguishingGraph& g) { return connected(detail::index_graph(g)); }

SurfaceReport surface_report(const DistinguishingGraph& g) {
  const Indexed ix = detail::index_graph(g);
  SurfaceReport r;
  r.connected = connected(ix);
  r.realizable = realizable(ix);
  r.euler_characteristic = euler(ix);
  if (r.realizable) {
    r.orientable = orient(ix).has_value();
    if (r.connected) r.genus = *r.orientable ? (2 - r.euler_characteristic) / 2 : 2 - r.euler_characteristic;
  }
  for (int v = 0; v < ix.vertex_count(); ++v) r.vertex_reports.push_back(report_of(ix, v));
  return r;
}

}  // namespace dg
