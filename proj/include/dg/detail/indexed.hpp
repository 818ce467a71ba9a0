#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dg/graph.hpp"

namespace dg::detail {

struct IxEdge {
  int tail;
  int head;
  int level;
};

struct IxDart {
  int edge;
  int dir;
};

struct IxCycle {
  int level;
  Role role;
  std::vector<IxDart> body;
  int anchor = -1;  // vertex index for point cycles
};

/// Integer view of a valid distinguishing graph. Vertices, edges and cycles
/// are numbered in canonical (sorted) order so results do not depend on
/// declaration order.
struct Indexed {
  int level_count = 0;
  std::vector<std::string> vertex_name, edge_name, cycle_name;
  std::vector<int> vertex_level;
  std::vector<int> degree;
  std::vector<IxEdge> edges;
  std::vector<IxCycle> cycles;
  std::vector<int> partner;                   // cycle -> paired cycle, -1 if none
  std::vector<std::array<int, 2>> edge_cycle;  // [edge][role] -> cycle
  std::vector<std::array<int, 2>> edge_pos;    // [edge][role] -> position in that cycle
  std::map<std::string, int, std::less<>> vertex_index, edge_index, cycle_index;

  int vertex_count() const { return static_cast<int>(vertex_name.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int vertex(std::string_view name) const;  // throws LookupError
};

constexpr int role_slot(Role r) { return r == Role::Lower ? 0 : 1; }

/// Edge-end node id: 2*edge for the tail end, 2*edge+1 for the head end.
constexpr int tail_end(int e) { return 2 * e; }
constexpr int head_end(int e) { return 2 * e + 1; }
/// End reached / left when traversing a dart.
constexpr int arrival_end(IxDart d) { return d.dir > 0 ? head_end(d.edge) : tail_end(d.edge); }
constexpr int departure_end(IxDart d) { return d.dir > 0 ? tail_end(d.edge) : head_end(d.edge); }

/// Requires a valid graph (throws PreconditionError otherwise).
Indexed index_graph(const DistinguishingGraph& g);

/// Same, skipping validation; caller guarantees validity.
Indexed index_valid_graph(const DistinguishingGraph& g);

/// Minimal union-find with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace dg::detail
