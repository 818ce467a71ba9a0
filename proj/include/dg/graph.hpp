#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dg {

/// Which end of a cylinder a cycle bounds. A lower cycle is the bottom end
/// of the cylinder above its level; an upper cycle is the top end of the
/// cylinder below it.
enum class Role : std::uint8_t { Lower, Upper };

constexpr Role opposite(Role r) { return r == Role::Lower ? Role::Upper : Role::Lower; }
std::string_view to_string(Role r);

/// An edge traversed in a direction: +1 runs tail to head, -1 head to tail.
struct Dart {
  std::string edge;
  int direction = +1;

  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Edge {
  std::string name;
  std::string tail;
  std::string head;

  bool is_loop() const { return tail == head; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Pre-image of one critical value. Only the ordinal `index` of the value
/// is kept; topological equivalence never looks at the real number.
struct LevelGraph {
  int index = 0;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const LevelGraph&, const LevelGraph&) = default;
};

/// A boundary trace on a level graph. A point cycle has an empty body and
/// names the isolated vertex (extremum) it sits on in `anchor`.
struct Cycle {
  std::string id;
  int level = 0;
  Role role = Role::Lower;
  std::vector<Dart> body;
  std::string anchor;

  bool is_point() const { return body.empty(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// A cylinder: `lower` is a lower cycle on level i, `upper` an upper cycle
/// on level i+1.
struct CylinderPairing {
  std::string lower;
  std::string upper;

  friend bool operator==(const CylinderPairing&, const CylinderPairing&) = default;
  friend auto operator<=>(const CylinderPairing&, const CylinderPairing&) = default;
};

struct DistinguishingGraph {
  std::vector<LevelGraph> levels;
  std::vector<Cycle> cycles;
  std::vector<CylinderPairing> pairings;

  int level_count() const { return static_cast<int>(levels.size()); }

  const Cycle* find_cycle(std::string_view id) const;
  const Edge* find_edge(std::string_view name) const;
  /// Level index of a vertex, or 0 if it does not exist.
  int vertex_level(std::string_view name) const;

  friend bool operator==(const DistinguishingGraph&, const DistinguishingGraph&) = default;
};

/// Same graph with levels, vertices, edges, cycles and pairings in the
/// order used by the text serializer. Cycle bodies keep their rotation.
DistinguishingGraph canonical_order(DistinguishingGraph g);

/// Identifier-for-identifier equality, ignoring declaration order.
bool same_graph(const DistinguishingGraph& a, const DistinguishingGraph& b);

}  // namespace dg
