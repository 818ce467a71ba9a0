#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dg/graph.hpp"

namespace dg {

/// A parsed document: the graph plus the line of every statement, so later
/// validation diagnostics can point back into the file.
struct DocumentModel {
  DistinguishingGraph graph;
  std::map<std::string, int> vertex_line;
  std::map<std::string, int> edge_line;
  std::map<std::string, int> cycle_line;
  std::vector<int> pair_line;  // parallel to graph.pairings

  /// Best source line for an identifier named in a violation (0 if unknown).
  int line_of(std::string_view subject) const;
};

/// Grammar (whitespace-separated tokens, '#' comments to end of line):
///
///   dg 1
///   levels N
///   level I            (1..N, ascending)
///     vertex NAME
///     edge NAME TAIL HEAD
///     cycle NAME lower|upper @VERTEX | NAME+ NAME- ...
///   pair LOWER UPPER   (after the last level)
///
/// Throws ParseError with the line of the offending statement.
DocumentModel parse_text(std::istream& in);
DocumentModel parse_text(std::string_view text);

/// Canonical text: levels ascending; per level sorted vertices, sorted
/// edges, lower cycles then upper cycles by name; sorted pairs.
std::string serialize_text(const DistinguishingGraph& g);

}  // namespace dg
