#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dg/graph.hpp"

namespace dg {

/// Oriented conjugacy: level order and cycle orientations preserved.
/// Conjugacy: level order preserved, cycles may flip (both ends of a
/// cylinder together). Equivalence: conjugacy to g or to -g.
enum class Relation { OrientedConjugacy, Conjugacy, Equivalence };

std::string_view to_string(Relation r);
/// Accepts the CLI spellings "oriented-conjugate", "conjugate", "equivalent".
std::optional<Relation> parse_relation(std::string_view s);

struct IsoWitness {
  struct EdgeImage {
    std::string edge;
    int direction = +1;  // -1: tail maps to the target's head
  };
  struct CycleImage {
    std::string cycle;
    int flip = +1;  // -1: image reads the target cycle backwards
  };

  std::map<std::string, std::string> vertex_map;
  std::map<std::string, EdgeImage> edge_map;
  std::map<std::string, CycleImage> cycle_map;
  /// Set for Equivalence when the witness targets negate(g2) (whose
  /// identifiers coincide with those of g2).
  bool via_negation = false;
};

/// Throws PreconditionError unless g is valid, connected, realizable and
/// smoothed.
void require_classifiable(const DistinguishingGraph& g);

/// Backtracking search over level-preserving edge assignments; each choice
/// is propagated along cycles, which fixes whole level components at once.
std::optional<IsoWitness> find_isomorphism(const DistinguishingGraph& g1, const DistinguishingGraph& g2,
                                           Relation r);

bool are_related(const DistinguishingGraph& g1, const DistinguishingGraph& g2, Relation r);

/// Independent check that `w` is an isomorphism g1 -> g2 (or -> negate(g2)
/// when w.via_negation) admitted by `r`. Returns an empty string on
/// success, otherwise a description of the first failure.
std::string check_witness(const DistinguishingGraph& g1, const DistinguishingGraph& g2, const IsoWitness& w,
                          Relation r);

/// Orbit-minimum serialization: equal for two graphs iff they are related
/// under r.
std::string canonical_key(const DistinguishingGraph& g, Relation r);

/// The graph relabeled by the labeling that realizes canonical_key, with
/// vertices v0.., edges e0.., cycles c0...
DistinguishingGraph canonical_form(const DistinguishingGraph& g, Relation r);

/// Search-space bound of the exhaustive oracle (number of candidate
/// level-preserving bijections).
inline constexpr double kOracleLimit = 5.0e6;

/// Exhaustive enumeration of every level-preserving bijection, with no
/// pruning. Throws SizeGuardError above kOracleLimit candidates.
bool oracle_isomorphic(const DistinguishingGraph& g1, const DistinguishingGraph& g2, Relation r);

}  // namespace dg
