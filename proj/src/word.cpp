#include "dg/word.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "dg/error.hpp"
#include "dg/topology.hpp"
#include "dg/transform.hpp"
#include "dg/validate.hpp"

namespace dg {

namespace {

constexpr int kMaxLetters = 26;
constexpr const char* kMinVertex = "min";
constexpr const char* kBouquetVertex = "saddle";
constexpr const char* kMaxVertex = "max";

std::string letter_name(int index) { return std::string(1, static_cast<char>('a' + index)); }

}  // namespace

bool SignedWord::all_positive() const {
  return std::all_of(body.begin(), body.end(), [](const Letter& l) { return l.sign > 0; });
}

SignedWord parse_word(std::string_view text) {
  SignedWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < 'a' || ch > 'z') throw InputError("word '" + std::string(text) + "': unexpected character '" + ch + "'");
    Letter l{ch - 'a', +1};
    if (i + 1 < text.size() && (text[i + 1] == '-' || text[i + 1] == '+')) {
      l.sign = text[i + 1] == '-' ? -1 : +1;
      ++i;
    }
    w.body.push_back(l);
  }
  w.letter_count = static_cast<int>(w.body.size());
  if (w.letter_count == 0) throw InputError("empty word");
  std::vector<bool> seen(kMaxLetters, false);
  for (const auto& l : w.body) {
    if (l.index >= w.letter_count)
      throw InputError("word '" + std::string(text) + "' uses letter '" + letter_name(l.index) + "' beyond its alphabet");
    if (seen[l.index]) throw InputError("word '" + std::string(text) + "' repeats letter '" + letter_name(l.index) + "'");
    seen[l.index] = true;
  }
  return w;
}

std::string format_word(const SignedWord& w) {
  std::string out;
  for (const auto& l : w.body) {
    out += static_cast<char>('a' + l.index);
    if (l.sign < 0) out += '-';
  }
  return out;
}

SignedWord normalize(SignedWord w) {
  auto a = std::find_if(w.body.begin(), w.body.end(), [](const Letter& l) { return l.index == 0; });
  if (a == w.body.end()) return w;
  if (a->sign < 0) {
    std::reverse(w.body.begin(), w.body.end());
    for (auto& l : w.body) l.sign = -l.sign;
    a = std::find_if(w.body.begin(), w.body.end(), [](const Letter& l) { return l.index == 0; });
  }
  std::rotate(w.body.begin(), a, w.body.end());
  return w;
}

int SurfaceSpec::letter_count() const {
  if (orientable) return genus == 0 ? 0 : 2 * genus + 1;
  return genus + 1;
}

std::string SurfaceSpec::str() const { return (orientable ? "g" : "n") + std::to_string(genus); }

SurfaceSpec parse_surface(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'g' && text[0] != 'n'))
    throw InputError("surface must look like g<genus> or n<genus>, got '" + std::string(text) + "'");
  SurfaceSpec s{text[0] == 'g', 0};
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, s.genus);
  if (ec != std::errc() || ptr != last || s.genus < 0)
    throw InputError("bad genus in surface '" + std::string(text) + "'");
  if (!s.orientable && s.genus == 0) throw InputError("non-orientable surfaces have genus at least 1");
  if (s.letter_count() > kMaxLetters) throw InputError("surface '" + std::string(text) + "' needs more than 26 letters");
  return s;
}

DistinguishingGraph word_to_graph(const SignedWord& w) {
  if (w.letter_count < 1 || w.letter_count > kMaxLetters || static_cast<int>(w.body.size()) != w.letter_count)
    throw InputError("invalid word");
  std::vector<bool> seen(w.letter_count, false);
  for (const auto& l : w.body) {
    if (l.index < 0 || l.index >= w.letter_count || seen[l.index] || (l.sign != 1 && l.sign != -1))
      throw InputError("invalid word '" + format_word(w) + "'");
    seen[l.index] = true;
  }

  DistinguishingGraph g;
  g.levels.push_back({1, {kMinVertex}, {}});
  LevelGraph middle{2, {kBouquetVertex}, {}};
  for (int i = 0; i < w.letter_count; ++i) middle.edges.push_back({letter_name(i), kBouquetVertex, kBouquetVertex});
  g.levels.push_back(std::move(middle));
  g.levels.push_back({3, {kMaxVertex}, {}});

  Cycle upper{"c_upper", 2, Role::Upper, {}, {}};
  for (const auto& l : w.body) upper.body.push_back({letter_name(l.index), l.sign});
  Cycle lower{"c_lower", 2, Role::Lower, {}, {}};
  for (int i = 0; i < w.letter_count; ++i) lower.body.push_back({letter_name(i), +1});

  g.cycles.push_back({"c_min", 1, Role::Lower, {}, kMinVertex});
  g.cycles.push_back(std::move(lower));
  g.cycles.push_back(std::move(upper));
  g.cycles.push_back({"c_max", 3, Role::Upper, {}, kMaxVertex});
  g.pairings.push_back({"c_min", "c_upper"});
  g.pairings.push_back({"c_lower", "c_max"});
  return g;
}

SignedWord graph_to_word(const DistinguishingGraph& input) {
  require_valid(input);
  const DistinguishingGraph g = canonical_order(input);
  if (g.level_count() != 3) throw ShapeError("a minimal-function graph has exactly three levels");
  for (int i : {0, 2})
    if (g.levels[i].vertices.size() != 1 || !g.levels[i].edges.empty())
      throw ShapeError("levels 1 and 3 must each be a single isolated extremum");
  const LevelGraph& mid = g.levels[1];
  if (mid.vertices.size() != 1 || mid.edges.empty())
    throw ShapeError("level 2 must be a bouquet of loops on a single vertex");
  if (static_cast<int>(mid.edges.size()) > kMaxLetters) throw ShapeError("bouquet has more than 26 loops");
  const Cycle* lower = nullptr;
  const Cycle* upper = nullptr;
  for (const auto& c : g.cycles) {
    if (c.level != 2) continue;
    if (c.is_point()) throw ShapeError("level 2 cannot carry point cycles");
    const Cycle*& slot = c.role == Role::Lower ? lower : upper;
    if (slot != nullptr) throw ShapeError("level 2 must carry exactly one lower and one upper cycle");
    slot = &c;
  }
  if (lower == nullptr || upper == nullptr) throw ShapeError("level 2 must carry exactly one lower and one upper cycle");

  // Name and orient the loops so that the lower cycle reads a+ b+ c+ ...
  std::map<std::string, Letter> rename;
  for (std::size_t i = 0; i < lower->body.size(); ++i)
    rename[lower->body[i].edge] = {static_cast<int>(i), lower->body[i].direction};
  SignedWord w;
  w.letter_count = static_cast<int>(lower->body.size());
  for (const auto& d : upper->body) {
    const Letter& l = rename.at(d.edge);
    w.body.push_back({l.index, d.direction * l.sign});
  }
  return normalize(std::move(w));
}

bool word_has_successive_fragment(const SignedWord& w) {
  if (!w.all_positive()) throw UnsupportedError("the successive-fragment filter is defined for oriented words only");
  const int m = w.letter_count;
  for (int i = 0; i < m; ++i) {
    const int x = w.body[i].index;
    const int y = w.body[(i + 1) % m].index;
    if (y == (x + 1) % m) return true;
  }
  return false;
}

bool word_planar(const SignedWord& w) {
  return classify_vertex(word_to_graph(w), kBouquetVertex) == VertexKind::Planar;
}

SignedWord word_mirror(const SignedWord& w) {
  const int m = w.letter_count;
  SignedWord out{m, {}};
  for (auto it = w.body.rbegin(); it != w.body.rend(); ++it) out.body.push_back({(m - it->index) % m, it->sign});
  return normalize(std::move(out));
}

SignedWord word_negate(const SignedWord& w) {
  if (!w.all_positive()) return graph_to_word(negate(word_to_graph(w)));
  const SignedWord n = normalize(w);
  SignedWord out{n.letter_count, std::vector<Letter>(n.body.size())};
  for (int i = 0; i < n.letter_count; ++i) out.body[n.body[i].index] = {i, +1};
  return normalize(std::move(out));
}

SignedWord word_rename(const SignedWord& w, int shift) {
  if (shift < 0 || shift >= w.letter_count)
    throw InputError("rename shift " + std::to_string(shift) + " outside [0, " + std::to_string(w.letter_count) + ")");
  SignedWord out = w;
  for (auto& l : out.body) l.index = (l.index + shift) % w.letter_count;
  return normalize(std::move(out));
}

std::vector<WordClass> word_classes(const std::vector<SignedWord>& words, Relation r) {
  std::vector<SignedWord> sorted;
  for (const auto& w : words) {
    if (w.letter_count != words.front().letter_count) throw InputError("word_classes needs words over one alphabet");
    sorted.push_back(normalize(w));
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const SignedWord& a, const SignedWord& b) { return format_word(a) < format_word(b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<WordClass> classes;
  std::vector<DistinguishingGraph> rep_graphs;
  for (const auto& w : sorted) {
    const DistinguishingGraph g = word_to_graph(w);
    bool placed = false;
    for (std::size_t k = 0; k < classes.size() && !placed; ++k) {
      if (are_related(g, rep_graphs[k], r)) {
        classes[k].members.push_back(w);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({w, {w}});
      rep_graphs.push_back(g);
    }
  }
  return classes;
}

std::vector<std::string> MinimalEnumeration::representatives() const {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(format_word(c.representative));
  return out;
}

std::vector<SignedWord> candidate_words(const SurfaceSpec& s) {
  const int m = s.letter_count();
  std::vector<SignedWord> out;
  if (m == 0) return out;
  std::vector<int> rest(m - 1);
  std::iota(rest.begin(), rest.end(), 1);
  auto make = [&](unsigned negative_mask) {
    SignedWord w{m, {{0, +1}}};
    for (int i = 0; i < m - 1; ++i) w.body.push_back({rest[i], (negative_mask >> i) & 1u ? -1 : +1});
    out.push_back(std::move(w));
  };
  do {
    if (s.orientable) {
      make(0);
      continue;
    }
    for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) make(mask);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

MinimalEnumeration enumerate_minimal(const SurfaceSpec& s, Relation r) {
  if (!s.orientable && r == Relation::OrientedConjugacy)
    throw UnsupportedError("oriented conjugacy is undefined on a non-orientable surface");
  MinimalEnumeration out{s, r, {}, {}, 0};
  if (s.letter_count() == 0) {
    out.count = 1;  // minimum and maximum only; all such functions are conjugate
    return out;
  }
  for (auto& w : candidate_words(s)) {
    if (s.orientable && word_has_successive_fragment(w)) continue;
    if (word_planar(w)) out.planar_words.push_back(std::move(w));
  }
  out.classes = word_classes(out.planar_words, r);
  out.count = out.classes.size();
  return out;
}

}  // namespace dg
