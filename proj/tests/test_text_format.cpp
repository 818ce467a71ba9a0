#include <gtest/gtest.h>

#include "support.hpp"

using namespace dg;
using namespace dgtest;

namespace {

int parse_error_line(const std::string& doc) {
  try {
    parse_text(doc);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Parse, SphereOnOneLine) {
  const auto doc = parse_text("dg 1  levels 2  level 1  vertex m  cycle c1 lower @m  level 2  vertex M  cycle c2 upper @M  pair c1 c2");
  EXPECT_TRUE(validate(doc.graph).ok());
  EXPECT_EQ(surface_report(doc.graph).euler_characteristic, 2);
}

TEST(Parse, TorusDocument) {
  const auto doc = parse_text(kTorus);
  EXPECT_TRUE(validate(doc.graph).ok());
  EXPECT_EQ(doc.graph.find_cycle("up")->body, (std::vector<Dart>{{"a", +1}, {"c", +1}, {"b", +1}}));
  EXPECT_EQ(doc.vertex_line.at("v"), 7);
  EXPECT_EQ(doc.edge_line.at("b"), 9);
  EXPECT_EQ(doc.pair_line, (std::vector<int>{16, 17}));
}

TEST(Parse, CommentsAndSpacedAnchor) {
  const auto doc = parse_text("dg 1 # header\nlevels 2\n# nothing\nlevel 1 vertex m cycle c1 lower @ m\nlevel 2\nvertex M\ncycle c2 upper @M\npair c1 c2\n");
  EXPECT_EQ(doc.graph.find_cycle("c1")->anchor, "m");
  EXPECT_EQ(doc.cycle_line.at("c1"), 4);
}

TEST(Parse, ReversedPairRoles) {
  std::string doc = kSphere;
  doc.replace(doc.find("pair c1 c2"), 10, "pair c2 c1");
  EXPECT_EQ(parse_error_line(doc), 9);
  try {
    parse_text(doc);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("lower"), std::string::npos);
  }
}

TEST(Parse, Diagnostics) {
  EXPECT_EQ(parse_error_line("dg 2\n"), 1);
  EXPECT_EQ(parse_error_line("graph 1\n"), 1);
  EXPECT_EQ(parse_error_line("dg 1\nlevel 1\n"), 2);                              // levels first
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 2\n"), 3);                    // out of order
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\nvertex m\n"), 5);  // duplicate
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\nedge e m q\n"), 5);  // dangling
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\nbogus\n"), 5);     // unknown token
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\ncycle c sideways @m\n"), 5);
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\nedge e m m\ncycle c lower e*\n"), 6);
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\ncycle c lower @m\npair c c\n"), 6);  // before all levels
  EXPECT_EQ(parse_error_line("dg 1\nlevels 3\nlevel 1\nvertex m\ncycle c lower @m\nlevel 2\n"), 6);  // too few levels
  EXPECT_EQ(parse_error_line("dg 1\nlevels 2\nlevel 1\nvertex m\nlevel 2\nvertex n\nedge e m n\n"), 7);  // cross-level edge
}

TEST(Parse, StreamOverload) {
  std::istringstream in(kTorus);
  EXPECT_TRUE(same_graph(parse_text(in).graph, torus()));
}

TEST(Serialize, CanonicalText) {
  EXPECT_EQ(serialize_text(torus()), R"(dg 1
levels 3
level 1
vertex m
cycle bottom lower @m
level 2
vertex v
edge a v v
edge b v v
edge c v v
cycle lo lower a+ b+ c+
cycle up upper a+ c+ b+
level 3
vertex M
cycle top upper @M
pair bottom up
pair lo top
)");
}

TEST(Serialize, RoundTrip) {
  for (const std::string doc : {std::string(kSphere), std::string(kTorus), redirected_doc(false), redirected_doc(true)}) {
    const auto g = parse(doc);
    const std::string text = serialize_text(g);
    const auto back = parse(text);
    EXPECT_TRUE(same_graph(back, g));
    EXPECT_EQ(canonical_order(back), canonical_order(g));
    EXPECT_EQ(serialize_text(back), text);
  }
}

TEST(Serialize, OrderIndependent) {
  Rng rng(11);
  const auto g = parse(redirected_doc(false));
  DistinguishingGraph shuffled = g;
  std::shuffle(shuffled.cycles.begin(), shuffled.cycles.end(), rng);
  std::shuffle(shuffled.pairings.begin(), shuffled.pairings.end(), rng);
  for (auto& l : shuffled.levels) {
    std::shuffle(l.vertices.begin(), l.vertices.end(), rng);
    std::shuffle(l.edges.begin(), l.edges.end(), rng);
  }
  EXPECT_EQ(serialize_text(shuffled), serialize_text(g));
}

TEST(Serialize, WordGraphStable) {
  const std::string first = serialize_text(word_graph("acb"));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(serialize_text(word_graph("acb")), first);
}

TEST(DocumentModel, LineOfSubject) {
  const auto doc = parse_text(kTorus);
  EXPECT_EQ(doc.line_of("lo"), 11);
  EXPECT_EQ(doc.line_of("a"), 8);
  EXPECT_EQ(doc.line_of("lo/top"), 17);
  EXPECT_EQ(doc.line_of("zzz"), 0);
}

}  // namespace
