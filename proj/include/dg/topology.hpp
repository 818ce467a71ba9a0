#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dg/graph.hpp"

namespace dg {

enum class VertexKind { Planar, Conic };
std::string_view to_string(VertexKind k);

enum class End { Tail, Head };

struct EdgeEnd {
  std::string edge;
  End end;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Adjacencies contributed to one edge-end by lower and by upper cycles.
/// In a valid graph each list has exactly one entry.
struct EndAdjacency {
  EdgeEnd end;
  std::vector<EdgeEnd> via_lower;
  std::vector<EdgeEnd> via_upper;
};

struct VertexReport {
  std::string vertex;
  int level = 0;
  int degree = 0;          // edge-ends; a loop counts twice
  int local_degree = 0;    // k of the local model Re z^k
  int index = 0;           // Poincare index 1 - k
  VertexKind kind = VertexKind::Planar;
  int link_components = 0;
};

struct SurfaceReport {
  bool connected = false;
  bool realizable = false;
  std::optional<bool> orientable;  // absent when not realizable
  int euler_characteristic = 0;
  std::optional<int> genus;        // absent unless realizable and connected
  std::vector<VertexReport> vertex_reports;
};

/// Edge directions and cycle signs with sign(C) * d == direction(e) for
/// every dart (e, d) of every cycle C.
struct OrientationAssignment {
  std::map<std::string, int> edge_direction;
  std::map<std::string, int> cycle_sign;
};

VertexReport vertex_report(const DistinguishingGraph& g, std::string_view vertex);

/// Same Poincare index.
bool locally_equivalent(const DistinguishingGraph& g1, std::string_view v1,
                        const DistinguishingGraph& g2, std::string_view v2);

std::vector<EndAdjacency> vertex_link_adjacency(const DistinguishingGraph& g, std::string_view vertex);

/// Link of a vertex as cyclic sequences of edge-ends. Each sequence starts
/// at its smallest end and steps first along the lower-cycle adjacency.
std::vector<std::vector<EdgeEnd>> vertex_link(const DistinguishingGraph& g, std::string_view vertex);

VertexKind classify_vertex(const DistinguishingGraph& g, std::string_view vertex);

bool is_realizable(const DistinguishingGraph& g);

int euler_characteristic(const DistinguishingGraph& g);

/// Requires a realizable graph. Absent iff the glued surface is non-orientable.
std::optional<OrientationAssignment> orientation_assignment(const DistinguishingGraph& g);

bool is_connected(const DistinguishingGraph& g);

SurfaceReport surface_report(const DistinguishingGraph& g);

}  // namespace dg
