#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "dg/classify.hpp"
#include "dg/error.hpp"
#include "dg/graph.hpp"
#include "dg/text_format.hpp"
#include "dg/topology.hpp"
#include "dg/transform.hpp"
#include "dg/validate.hpp"
#include "dg/word.hpp"

namespace dgtest {

using namespace dg;

inline constexpr const char* kSphere = R"(dg 1
levels 2
level 1
vertex m
cycle c1 lower @m
level 2
vertex M
cycle c2 upper @M
pair c1 c2
)";

inline constexpr const char* kTorus = R"(dg 1
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
)";

// Two cylinders run from level 2 to level 3; `swap` exchanges their tops.
inline std::string redirected_doc(bool swap) {
  std::string doc = R"(dg 1
levels 4
level 1
vertex x
vertex y
vertex z
cycle px lower @x
cycle py lower @y
cycle pz lower @z
level 2
vertex s
vertex w
edge a s s
edge b s s
edge c w w
cycle ua upper a+
cycle ub upper b+
cycle uc upper c+
cycle A lower a+ b+
cycle C lower c+
level 3
vertex t
edge d t t
edge e t t
edge f t t
cycle U1 upper d+
cycle U2 upper e+ f+
cycle L lower d+ e- f+
level 4
vertex N
cycle top upper @N
pair px ua
pair py ub
pair pz uc
pair L top
)";
  doc += swap ? "pair A U2\npair C U1\n" : "pair A U1\npair C U2\n";
  return doc;
}

inline DistinguishingGraph parse(const std::string& text) { return parse_text(text).graph; }
inline DistinguishingGraph sphere() { return parse(kSphere); }
inline DistinguishingGraph torus() { return parse(kTorus); }
inline DistinguishingGraph word_graph(const std::string& w) { return word_to_graph(parse_word(w)); }

inline const std::vector<Relation> kRelations = {Relation::OrientedConjugacy, Relation::Conjugacy,
                                                 Relation::Equivalence};

inline bool orientable(const DistinguishingGraph& g) { return orientation_assignment(g).has_value(); }

// ---- random generation ------------------------------------------------------

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline SignedWord random_word(Rng& rng, int m, bool allow_signs) {
  std::vector<int> perm(m - 1);
  for (int i = 0; i < m - 1; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  SignedWord w{m, {{0, +1}}};
  for (int x : perm) w.body.push_back({x, allow_signs && uniform(rng, 0, 1) ? -1 : +1});
  return w;
}

/// Random planar word of 2..max_m letters.
inline SignedWord random_planar_word(Rng& rng, int max_m, bool allow_signs) {
  for (;;) {
    SignedWord w = random_word(rng, uniform(rng, 2, max_m), allow_signs);
    if (word_planar(w)) return w;
  }
}

/// Random multi-level graph of extrema and saddle components. Every
/// result is valid, connected, realizable and smooth, with at most
/// `max_edges` edges and at most `max_level_edges` on one level.
inline DistinguishingGraph random_stacked(Rng& rng, int max_edges = 12, int max_level_edges = 5) {
  for (;;) {
    DistinguishingGraph g;
    const int n = uniform(rng, 3, 5);
    int edges_left = max_edges;
    int counter = 0;
    auto fresh = [&](const char* p) { return std::string(p) + std::to_string(counter++); };
    std::vector<std::string> pending_lower;  // lower cycles of the previous level
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      LevelGraph level{i, {}, {}};
      std::vector<std::string> uppers, lowers;
      auto point = [&](Role role) {
        const std::string v = fresh("v");
        level.vertices.push_back(v);
        Cycle c{fresh("c"), i, role, {}, v};
        (role == Role::Lower ? lowers : uppers).push_back(c.id);
        g.cycles.push_back(std::move(c));
      };
      if (i > 1 && i < n) {
        int level_edges = 0;
        const int components = uniform(rng, 1, 2);
        for (int b = 0; b < components; ++b) {
          const int k = uniform(rng, 1, 4);
          if (k > edges_left || level_edges + k > max_level_edges) break;
          // a bouquet, or up to three vertices joined by random closed trails
          const int nv = uniform(rng, 0, 1) == 0 ? uniform(rng, 2, 3) : 1;
          std::vector<std::string> vs;
          for (int j = 0; j < nv; ++j) vs.push_back(fresh("v"));
          std::vector<Edge> edges;
          while (static_cast<int>(edges.size()) < k) {
            const int len = std::min(uniform(rng, 1, 3), k - static_cast<int>(edges.size()));
            std::vector<std::string> trail;
            for (int j = 0; j < len; ++j) trail.push_back(vs[static_cast<std::size_t>(uniform(rng, 0, nv - 1))]);
            for (int j = 0; j < len; ++j) edges.push_back({fresh("e"), trail[j], trail[(j + 1) % len]});
          }
          std::map<std::string, int> degree;
          for (const auto& e : edges) degree[e.tail]++, degree[e.head]++;
          for (const auto& v : vs)
            if (degree[v] > 0) level.vertices.push_back(v);
          edges_left -= k;
          level_edges += k;
          for (Role role : {Role::Lower, Role::Upper}) {
            // random decomposition into closed walks; in an even graph a
            // walk on unused edges can only get stuck where it started
            std::vector<bool> used(edges.size(), false);
            std::size_t left = edges.size();
            while (left > 0) {
              std::vector<std::size_t> open;
              for (std::size_t j = 0; j < edges.size(); ++j)
                if (!used[j]) open.push_back(j);
              std::size_t j = open[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(open.size()) - 1))];
              int dir = uniform(rng, 0, 1) ? +1 : -1;
              const std::string start = dir > 0 ? edges[j].tail : edges[j].head;
              Cycle c{fresh("c"), i, role, {}, ""};
              for (;;) {
                used[j] = true;
                --left;
                c.body.push_back({edges[j].name, dir});
                const std::string at = dir > 0 ? edges[j].head : edges[j].tail;
                std::vector<std::pair<std::size_t, int>> next;
                for (std::size_t x = 0; x < edges.size(); ++x) {
                  if (used[x]) continue;
                  if (edges[x].tail == at) next.emplace_back(x, +1);
                  if (edges[x].head == at) next.emplace_back(x, -1);
                }
                if (next.empty() || (at == start && uniform(rng, 0, 2) == 0)) break;
                std::tie(j, dir) = next[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(next.size()) - 1))];
              }
              (role == Role::Lower ? lowers : uppers).push_back(c.id);
              g.cycles.push_back(std::move(c));
            }
          }
          for (auto& e : edges) level.edges.push_back(std::move(e));
        }
        if (uppers.size() > pending_lower.size()) {
          ok = false;
          break;
        }
      }
      if (i > 1) {
        while (uppers.size() < pending_lower.size()) point(Role::Upper);
        std::shuffle(uppers.begin(), uppers.end(), rng);
        for (std::size_t j = 0; j < uppers.size(); ++j) g.pairings.push_back({pending_lower[j], uppers[j]});
      }
      if (i < n) {
        const int extra = i == 1 ? uniform(rng, 1, 2) : uniform(rng, 0, 1);
        for (int j = 0; j < extra || (lowers.empty()); ++j) point(Role::Lower);
      }
      pending_lower = lowers;
      g.levels.push_back(std::move(level));
    }
    if (!ok || g.level_count() != n) continue;
    if (!validate(g).ok() || !is_connected(g) || !is_realizable(g)) continue;
    return smooth(g);
  }
}

// ---- perturbations ----------------------------------------------------------

/// Renames every identifier and shuffles every declaration list.
inline DistinguishingGraph relabel(const DistinguishingGraph& g, Rng& rng) {
  std::map<std::string, std::string> rename;
  int counter = 0;
  auto name_for = [&](const std::string& old) {
    auto [it, fresh] = rename.emplace(old, "");
    if (fresh) it->second = "r" + std::to_string(uniform(rng, 0, 999)) + "_" + std::to_string(counter++);
    return it->second;
  };
  DistinguishingGraph out = g;
  for (auto& l : out.levels) {
    for (auto& v : l.vertices) v = name_for("v:" + v);
    for (auto& e : l.edges) {
      e.name = name_for("e:" + e.name);
      e.tail = name_for("v:" + e.tail);
      e.head = name_for("v:" + e.head);
    }
    std::shuffle(l.vertices.begin(), l.vertices.end(), rng);
    std::shuffle(l.edges.begin(), l.edges.end(), rng);
  }
  for (auto& c : out.cycles) {
    c.id = name_for("c:" + c.id);
    if (!c.anchor.empty()) c.anchor = name_for("v:" + c.anchor);
    for (auto& d : c.body) d.edge = name_for("e:" + d.edge);
  }
  for (auto& p : out.pairings) {
    p.lower = name_for("c:" + p.lower);
    p.upper = name_for("c:" + p.upper);
  }
  std::shuffle(out.cycles.begin(), out.cycles.end(), rng);
  std::shuffle(out.pairings.begin(), out.pairings.end(), rng);
  return out;
}

/// Reverses edge `k` (counted over all levels) and every dart on it.
inline DistinguishingGraph reverse_edge(const DistinguishingGraph& g, std::size_t k) {
  DistinguishingGraph out = g;
  std::string name;
  for (auto& l : out.levels)
    for (auto& e : l.edges)
      if (k-- == 0) {
        std::swap(e.tail, e.head);
        name = e.name;
      }
  for (auto& c : out.cycles)
    for (auto& d : c.body)
      if (d.edge == name) d.direction = -d.direction;
  return out;
}

inline std::size_t edge_count(const DistinguishingGraph& g) {
  std::size_t n = 0;
  for (const auto& l : g.levels) n += l.edges.size();
  return n;
}

inline DistinguishingGraph rotate_cycles(const DistinguishingGraph& g, Rng& rng) {
  DistinguishingGraph out = g;
  for (auto& c : out.cycles)
    if (c.body.size() > 1)
      std::rotate(c.body.begin(), c.body.begin() + uniform(rng, 0, static_cast<int>(c.body.size()) - 1), c.body.end());
  return out;
}

/// Reads one nonempty cycle backwards.
inline DistinguishingGraph flip_cycle(const DistinguishingGraph& g, Rng& rng) {
  DistinguishingGraph out = g;
  std::vector<Cycle*> nonempty;
  for (auto& c : out.cycles)
    if (!c.is_point()) nonempty.push_back(&c);
  if (nonempty.empty()) return out;
  Cycle& c = *nonempty[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nonempty.size()) - 1))];
  std::reverse(c.body.begin(), c.body.end());
  for (auto& d : c.body) d.direction = -d.direction;
  return out;
}

/// Exchanges the upper ends of two pairings between the same levels, if any.
inline std::optional<DistinguishingGraph> swap_pairing(const DistinguishingGraph& g, Rng& rng) {
  DistinguishingGraph out = g;
  std::vector<std::pair<std::size_t, std::size_t>> options;
  for (std::size_t i = 0; i < out.pairings.size(); ++i)
    for (std::size_t j = i + 1; j < out.pairings.size(); ++j)
      if (out.find_cycle(out.pairings[i].lower)->level == out.find_cycle(out.pairings[j].lower)->level)
        options.emplace_back(i, j);
  if (options.empty()) return std::nullopt;
  auto [i, j] = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
  std::swap(out.pairings[i].upper, out.pairings[j].upper);
  return out;
}

/// A random perturbation chain. Some steps preserve the oriented class,
/// others (mirror, negate, flip, pairing swap) usually do not.
inline DistinguishingGraph perturb(const DistinguishingGraph& g, Rng& rng) {
  DistinguishingGraph out = g;
  const int steps = uniform(rng, 1, 3);
  for (int s = 0; s < steps; ++s) {
    switch (uniform(rng, 0, 6)) {
      case 0: out = relabel(out, rng); break;
      case 1:
        if (edge_count(out) > 0) out = reverse_edge(out, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(edge_count(out)) - 1)));
        break;
      case 2: out = rotate_cycles(out, rng); break;
      case 3: out = mirror(out); break;
      case 4: out = negate(out); break;
      case 5: out = flip_cycle(out, rng); break;
      case 6:
        if (auto swapped = swap_pairing(out, rng); swapped && is_connected(*swapped)) out = *swapped;
        break;
    }
  }
  return relabel(out, rng);
}

}  // namespace dgtest
