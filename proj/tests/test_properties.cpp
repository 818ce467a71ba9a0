#include <gtest/gtest.h>

#include "support.hpp"

using namespace dg;
using namespace dgtest;

namespace {

DistinguishingGraph random_base(Rng& rng) {
  if (uniform(rng, 0, 1)) return word_to_graph(random_planar_word(rng, 5, uniform(rng, 0, 1) == 1));
  return random_stacked(rng);
}

std::vector<int> sorted_indices(const DistinguishingGraph& g) {
  std::vector<int> out;
  for (const auto& v : surface_report(g).vertex_reports) out.push_back(v.index);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Property, StackedGeneratorProducesClassifiableGraphs) {
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_stacked(rng);
    ASSERT_TRUE(validate(g).ok());
    EXPECT_NO_THROW(require_classifiable(g));
    EXPECT_LE(edge_count(g), 12u);
  }
}

TEST(Property, IndexSumIsEulerCharacteristic) {
  Rng rng(102);
  for (int i = 0; i < 150; ++i) {
    const auto g = random_base(rng);
    int sum = 0;
    for (const auto& v : surface_report(g).vertex_reports) {
      sum += v.index;
      EXPECT_EQ(v.degree, 2 * v.local_degree);
      EXPECT_EQ(v.index, 1 - v.local_degree);
    }
    EXPECT_EQ(sum, euler_characteristic(g));
  }
}

TEST(Property, EveryEndHasOneLowerAndOneUpperNeighbour) {
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_base(rng);
    for (const auto& l : g.levels)
      for (const auto& v : l.vertices)
        for (const auto& a : vertex_link_adjacency(g, v)) {
          EXPECT_EQ(a.via_lower.size(), 1u);
          EXPECT_EQ(a.via_upper.size(), 1u);
        }
  }
}

TEST(Property, SmoothAndSubdividePreserveInvariants) {
  Rng rng(104);
  for (int i = 0; i < 80; ++i) {
    const auto g = random_base(rng);
    const auto sub = subdivide_loops(g);
    ASSERT_TRUE(validate(sub).ok());
    const auto back = smooth(sub);
    ASSERT_TRUE(validate(back).ok());
    for (const auto* h : {&sub, &back}) {
      const SurfaceReport a = surface_report(g), b = surface_report(*h);
      EXPECT_EQ(a.euler_characteristic, b.euler_characteristic);
      EXPECT_EQ(a.orientable, b.orientable);
      EXPECT_EQ(a.genus, b.genus);
      EXPECT_EQ(a.connected, b.connected);
      EXPECT_EQ(a.realizable, b.realizable);
    }
    for (Relation r : kRelations) EXPECT_TRUE(are_related(back, g, r));
  }
}

TEST(Property, SearchAgreesWithOracleAndKeys) {
  Rng rng(105);
  int related = 0, unrelated = 0;
  for (int i = 0; i < 150; ++i) {
    const auto g1 = random_base(rng);
    const auto g2 = uniform(rng, 0, 3) == 0 ? random_base(rng) : perturb(g1, rng);
    for (Relation r : kRelations) {
      const auto w = find_isomorphism(g1, g2, r);
      bool oracle = false;
      try {
        oracle = oracle_isomorphic(g1, g2, r);
      } catch (const SizeGuardError&) {
        continue;
      }
      ASSERT_EQ(w.has_value(), oracle) << serialize_text(g1) << serialize_text(g2) << to_string(r);
      EXPECT_EQ(canonical_key(g1, r) == canonical_key(g2, r), oracle) << serialize_text(g1) << serialize_text(g2);
      if (w) EXPECT_EQ(check_witness(g1, g2, *w, r), "");
      (oracle ? related : unrelated) += 1;
    }
  }
  EXPECT_GT(related, 50);
  EXPECT_GT(unrelated, 50);
}

TEST(Property, RelatedGraphsShareInvariants) {
  Rng rng(106);
  for (int i = 0; i < 120; ++i) {
    const auto g1 = random_base(rng);
    const auto g2 = perturb(g1, rng);
    if (!are_related(g1, g2, Relation::Equivalence)) continue;
    const SurfaceReport a = surface_report(g1), b = surface_report(g2);
    EXPECT_EQ(a.euler_characteristic, b.euler_characteristic);
    EXPECT_EQ(a.orientable, b.orientable);
    EXPECT_EQ(a.genus, b.genus);
    EXPECT_EQ(sorted_indices(g1), sorted_indices(g2));
  }
}

TEST(Property, RelationsAreEquivalenceRelations) {
  Rng rng(107);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_base(rng);
    const auto b = perturb(a, rng);
    const auto c = perturb(b, rng);
    for (Relation r : kRelations) {
      EXPECT_TRUE(are_related(a, a, r));
      const bool ab = are_related(a, b, r), bc = are_related(b, c, r);
      EXPECT_EQ(ab, are_related(b, a, r));
      if (ab && bc) EXPECT_TRUE(are_related(a, c, r));
    }
    const bool oc = are_related(a, b, Relation::OrientedConjugacy);
    const bool cj = are_related(a, b, Relation::Conjugacy);
    EXPECT_TRUE(!oc || cj);
    EXPECT_TRUE(!cj || are_related(a, b, Relation::Equivalence));
    EXPECT_EQ(are_related(a, b, Relation::Equivalence), cj || are_related(a, negate(b), Relation::Conjugacy));
  }
}

TEST(Property, TransformsAreInvolutionsAndCommute) {
  Rng rng(108);
  for (int i = 0; i < 80; ++i) {
    const auto g = random_base(rng);
    EXPECT_TRUE(are_related(mirror(mirror(g)), g, Relation::OrientedConjugacy));
    EXPECT_TRUE(are_related(negate(negate(g)), g, Relation::OrientedConjugacy));
    EXPECT_TRUE(are_related(mirror(negate(g)), negate(mirror(g)), Relation::OrientedConjugacy));
    EXPECT_TRUE(are_related(negate(g), g, Relation::Equivalence));
    EXPECT_EQ(surface_report(negate(g)).genus, surface_report(g).genus);
  }
}

TEST(Property, RelabelingKeepsOrientedClass) {
  Rng rng(109);
  for (int i = 0; i < 80; ++i) {
    const auto g = random_base(rng);
    auto h = rotate_cycles(relabel(g, rng), rng);
    if (edge_count(h) > 0) h = reverse_edge(h, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(edge_count(h)) - 1)));
    EXPECT_TRUE(are_related(g, h, Relation::OrientedConjugacy));
    EXPECT_EQ(canonical_key(g, Relation::OrientedConjugacy), canonical_key(h, Relation::OrientedConjugacy));
  }
}

TEST(Property, TextRoundTrip) {
  Rng rng(110);
  for (int i = 0; i < 100; ++i) {
    const auto g = relabel(random_base(rng), rng);
    const std::string text = serialize_text(g);
    const auto back = parse_text(text).graph;
    EXPECT_TRUE(same_graph(back, g));
    EXPECT_EQ(serialize_text(back), text);
  }
}

TEST(Property, WordMovesPreservePlanarity) {
  Rng rng(111);
  for (int i = 0; i < 200; ++i) {
    const SignedWord w = random_word(rng, uniform(rng, 2, 7), uniform(rng, 0, 1) == 1);
    const bool planar = word_planar(w);
    EXPECT_EQ(word_planar(word_mirror(w)), planar);
    EXPECT_EQ(word_planar(word_negate(w)), planar);
    for (int s = 0; s < w.letter_count; ++s) EXPECT_EQ(word_planar(word_rename(w, s)), planar);
    EXPECT_EQ(word_negate(word_negate(w)), normalize(w));
    EXPECT_EQ(word_mirror(word_mirror(w)), normalize(w));
    const auto g = word_to_graph(w);
    EXPECT_TRUE(validate(g).ok());
    EXPECT_EQ(euler_characteristic(g), 3 - w.letter_count);
    if (planar) EXPECT_EQ(orientable(g), w.all_positive());
  }
}

TEST(Property, RenameOrbitSizeDividesLetterCount) {
  Rng rng(112);
  for (int i = 0; i < 100; ++i) {
    const SignedWord w = random_word(rng, uniform(rng, 2, 7), uniform(rng, 0, 1) == 1);
    std::set<SignedWord> orbit;
    for (int s = 0; s < w.letter_count; ++s) orbit.insert(word_rename(w, s));
    EXPECT_EQ(w.letter_count % static_cast<int>(orbit.size()), 0);
  }
}

TEST(Property, WordMovesPreserveGraphClass) {
  Rng rng(113);
  for (int i = 0; i < 60; ++i) {
    const SignedWord w = random_planar_word(rng, 7, uniform(rng, 0, 1) == 1);
    const auto g = word_to_graph(w);
    // normalizing a signed word may read its upper cycle backwards
    const Relation r = w.all_positive() ? Relation::OrientedConjugacy : Relation::Conjugacy;
    EXPECT_TRUE(are_related(word_to_graph(word_rename(w, uniform(rng, 0, w.letter_count - 1))), g, r));
    EXPECT_TRUE(are_related(word_to_graph(word_mirror(w)), mirror(g), Relation::OrientedConjugacy));
    EXPECT_TRUE(are_related(word_to_graph(word_negate(w)), negate(g), Relation::OrientedConjugacy));
  }
}

}  // namespace
