#pragma once

#include "dg/graph.hpp"

namespace dg {

/// Removes every vertex with exactly two edge-ends that lie on two
/// different non-loop edges, merging the edges. A bare circle keeps one
/// vertex and becomes a single loop. The merged edge keeps the smaller of
/// the two names and that edge's sense of direction.
DistinguishingGraph smooth(const DistinguishingGraph& g);

/// True iff smooth(g) would leave g unchanged.
bool is_smooth(const DistinguishingGraph& g);

/// Splits every loop `e` at `v` into `e_1` (v -> m) and `e_2` (m -> v)
/// through a fresh vertex `e_m`, rewriting cycle occurrences.
DistinguishingGraph subdivide_loops(const DistinguishingGraph& g);

/// Graph of -f: level i becomes level n+1-i and every cycle changes role.
DistinguishingGraph negate(const DistinguishingGraph& g);

/// Reverses the orientation of every cycle (orientation-reversing change
/// of the surface).
DistinguishingGraph mirror(const DistinguishingGraph& g);

}  // namespace dg
