#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dg/graph.hpp"

namespace dg {

enum class ViolationKind {
  Structural,  // unresolved or duplicate identifier, bad direction, wrong level
  Level,       // level numbering or count
  Role,        // upper cycle on the first level, lower cycle on the last
  ClosedWalk,  // consecutive darts do not meet at a vertex
  Coverage,    // an edge is not in exactly one lower and one upper cycle
  Anchor,      // point cycle on a non-isolated vertex, or isolated vertex anchoring != 1 cycle
  Pairing,     // cylinder pairings are not a bijection between adjacent levels
  Parity,      // odd number of edge-ends at a vertex
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string subject;  // offending identifier
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind, std::string_view subject) const;
};

ValidationReport validate(const DistinguishingGraph& g);

/// Throws PreconditionError carrying the first violations if `g` is invalid.
void require_valid(const DistinguishingGraph& g);

}  // namespace dg
