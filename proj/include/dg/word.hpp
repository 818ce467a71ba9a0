#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dg/classify.hpp"
#include "dg/graph.hpp"

namespace dg {

/// One letter of a signed word: alphabet position (0 = 'a') and sign.
struct Letter {
  int index = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Upper cycle of a minimal function spelled over the edges of the bouquet,
/// whose lower cycle reads a b c ... . Every letter of the alphabet
/// {a, ..., a+m-1} occurs exactly once; a negative sign marks an edge
/// traversed against its orientation (non-orientable surfaces only).
struct SignedWord {
  int letter_count = 0;
  std::vector<Letter> body;

  bool all_positive() const;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
  friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
};

/// Parses "acbed" or "ab-c-d-" (a trailing '-' inverts a letter). The
/// alphabet size is the number of letters. Throws InputError.
SignedWord parse_word(std::string_view text);
std::string format_word(const SignedWord& w);

/// Rotates to start at a+, reversing the cycle (and flipping signs) first
/// when 'a' occurs inverted.
SignedWord normalize(SignedWord w);

struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;

  /// Bouquet size of a minimal function: 2g+1 (orientable), p+1 otherwise.
  /// Zero for the sphere.
  int letter_count() const;
  std::string str() const;
};

/// "g0", "g1", ..., "n1", "n2", ... Throws InputError.
SurfaceSpec parse_surface(std::string_view text);

/// Three levels: a minimum, the bouquet of m loops named by the alphabet
/// (upper cycle reads w, lower cycle reads a+ b+ ...), a maximum.
DistinguishingGraph word_to_graph(const SignedWord& w);

/// Inverse of word_to_graph up to renaming. Throws ShapeError unless g has
/// three levels with point extrema and a single bouquet vertex in between.
SignedWord graph_to_word(const DistinguishingGraph& g);

/// Some cyclically consecutive pair reads x, succ(x) (with the wrap from the
/// last letter to a). Oriented words only; throws UnsupportedError.
bool word_has_successive_fragment(const SignedWord& w);

/// The bouquet vertex of word_to_graph(w) is planar.
bool word_planar(const SignedWord& w);

/// Orientation reversal: reverse the letter order and apply the alphabet
/// involution fixing a (b <-> last, c <-> second to last, ...).
SignedWord word_mirror(const SignedWord& w);

/// Word of -f. For an all-positive word with letters a_1 a_2 ... this is the
/// image of a b c ... under a_i -> i-th letter; signed words go through the
/// graph (negate, then graph_to_word).
SignedWord word_negate(const SignedWord& w);

/// Cyclic renaming a -> a+shift, then normalization. 0 <= shift < m.
SignedWord word_rename(const SignedWord& w, int shift);

struct WordClass {
  SignedWord representative;        // lexicographically least formatted member
  std::vector<SignedWord> members;  // normalized, sorted by formatted text
};

/// Partition by are_related on the word graphs. Classes are sorted by the
/// formatted representative. Throws InputError on mixed alphabet sizes.
std::vector<WordClass> word_classes(const std::vector<SignedWord>& words, Relation r);

struct MinimalEnumeration {
  SurfaceSpec surface;
  Relation relation;
  std::vector<SignedWord> planar_words;  // every normalized word with a planar vertex
  std::vector<WordClass> classes;
  std::size_t count = 0;                 // 1 for the sphere, which has no word

  std::vector<std::string> representatives() const;
};

/// All normalized candidate words for a surface (before the planarity
/// filter): (m-1)! permutations, or for non-orientable surfaces every
/// signed permutation with at least one inverted letter.
std::vector<SignedWord> candidate_words(const SurfaceSpec& s);

MinimalEnumeration enumerate_minimal(const SurfaceSpec& s, Relation r);

}  // namespace dg
