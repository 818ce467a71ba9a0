#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "dg/classify.hpp"
#include "dg/detail/indexed.hpp"
#include "dg/error.hpp"
#include "dg/topology.hpp"
#include "dg/transform.hpp"
#include "dg/validate.hpp"

namespace dg {

using detail::Indexed;

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::OrientedConjugacy: return "oriented-conjugate";
    case Relation::Conjugacy: return "conjugate";
    case Relation::Equivalence: return "equivalent";
  }
  return "unknown";
}

std::optional<Relation> parse_relation(std::string_view s) {
  for (Relation r : {Relation::OrientedConjugacy, Relation::Conjugacy, Relation::Equivalence})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

void require_classifiable(const DistinguishingGraph& g) {
  require_valid(g);
  const SurfaceReport s = surface_report(g);
  if (!s.connected) throw PreconditionError("classification needs a connected graph");
  if (!s.realizable) throw PreconditionError("classification needs a realizable graph (a conic vertex was found)");
  if (!is_smooth(g)) throw PreconditionError("classification needs a smoothed graph (apply smooth first)");
}

namespace {

// Invariants that any isomorphism preserves; mismatch means "unrelated".
auto shape_signature(const Indexed& ix) {
  std::vector<std::tuple<int, int, int>> vertices;  // level, degree, 0
  for (int v = 0; v < ix.vertex_count(); ++v) vertices.emplace_back(ix.vertex_level[v], ix.degree[v], 0);
  std::vector<std::tuple<int, int, int>> cycles;  // level, role, length
  for (const auto& c : ix.cycles)
    cycles.emplace_back(c.level, static_cast<int>(c.role), static_cast<int>(c.body.size()));
  std::sort(vertices.begin(), vertices.end());
  std::sort(cycles.begin(), cycles.end());
  return std::tuple{ix.level_count, vertices, cycles, ix.edge_count()};
}

struct SearchState {
  std::vector<int> emap, edir, erev;
  std::vector<int> vmap, vrev;
  std::vector<int> cmap, cflip, crev;
};

class IsoSearch {
 public:
  IsoSearch(const Indexed& a, const Indexed& b, bool allow_flip) : a_(a), b_(b), allow_flip_(allow_flip) {}

  std::optional<SearchState> run() {
    if (shape_signature(a_) != shape_signature(b_)) return std::nullopt;
    SearchState s;
    s.emap.assign(a_.edge_count(), -1);
    s.edir.assign(a_.edge_count(), 0);
    s.erev.assign(b_.edge_count(), -1);
    s.vmap.assign(a_.vertex_count(), -1);
    s.vrev.assign(b_.vertex_count(), -1);
    s.cmap.assign(a_.cycle_count(), -1);
    s.cflip.assign(a_.cycle_count(), 0);
    s.crev.assign(b_.cycle_count(), -1);
    if (search(s)) return result_;
    return std::nullopt;
  }

 private:
  struct Assign {
    int edge, target, dir;
  };

  bool bind_vertex(SearchState& s, int v, int w) const {
    if (s.vmap[v] == -1 && s.vrev[w] == -1) {
      if (a_.degree[v] != b_.degree[w] || a_.vertex_level[v] != b_.vertex_level[w]) return false;
      s.vmap[v] = w;
      s.vrev[w] = v;
      return true;
    }
    return s.vmap[v] == w;
  }

  bool bind_cycle(SearchState& s, int c, int d, int flip) const {
    if (s.cmap[c] == -1 && s.crev[d] == -1) {
      s.cmap[c] = d;
      s.crev[d] = c;
      s.cflip[c] = flip;
      return true;
    }
    return s.cmap[c] == d && s.cflip[c] == flip;
  }

  bool propagate(SearchState& s, Assign first) const {
    std::deque<Assign> todo{first};
    while (!todo.empty()) {
      const Assign cur = todo.front();
      todo.pop_front();
      if (s.emap[cur.edge] != -1) {
        if (s.emap[cur.edge] != cur.target || s.edir[cur.edge] != cur.dir) return false;
        continue;
      }
      if (s.erev[cur.target] != -1) return false;
      s.emap[cur.edge] = cur.target;
      s.edir[cur.edge] = cur.dir;
      s.erev[cur.target] = cur.edge;
      const auto& ea = a_.edges[cur.edge];
      const auto& eb = b_.edges[cur.target];
      if (ea.level != eb.level) return false;
      if (!bind_vertex(s, ea.tail, cur.dir > 0 ? eb.tail : eb.head)) return false;
      if (!bind_vertex(s, ea.head, cur.dir > 0 ? eb.head : eb.tail)) return false;

      for (int slot = 0; slot < 2; ++slot) {
        const int ca = a_.edge_cycle[cur.edge][slot];
        const int cb = b_.edge_cycle[cur.target][slot];
        const int pa = a_.edge_pos[cur.edge][slot];
        const int pb = b_.edge_pos[cur.target][slot];
        const auto& body_a = a_.cycles[ca].body;
        const auto& body_b = b_.cycles[cb].body;
        const int flip = body_b[pb].dir == body_a[pa].dir * cur.dir ? 1 : -1;
        if (!allow_flip_ && flip < 0) return false;
        if (s.cmap[ca] != -1) {
          if (s.cmap[ca] != cb || s.cflip[ca] != flip) return false;
          continue;
        }
        if (body_a.size() != body_b.size()) return false;
        if (!bind_cycle(s, ca, cb, flip)) return false;
        const int len = static_cast<int>(body_a.size());
        for (int t = 1; t < len; ++t) {
          const auto& da = body_a[(pa + t) % len];
          const auto& db = body_b[((pb + flip * t) % len + len) % len];
          todo.push_back({da.edge, db.edge, flip * da.dir * db.dir});
        }
      }
    }
    return true;
  }

  bool search(const SearchState& s) {
    const auto next = std::find(s.emap.begin(), s.emap.end(), -1);
    if (next == s.emap.end()) return finish(s);
    const int e = static_cast<int>(next - s.emap.begin());
    const auto& ea = a_.edges[e];
    for (int t = 0; t < b_.edge_count(); ++t) {
      if (s.erev[t] != -1 || b_.edges[t].level != ea.level) continue;
      for (int dir : {+1, -1}) {
        SearchState child = s;
        if (propagate(child, {e, t, dir}) && search(child)) return true;
      }
    }
    return false;
  }

  // All edges are placed; extrema follow their cylinder partners, and
  // stand-alone point-point cylinders are matched level by level.
  bool finish(SearchState s) {
    for (int c = 0; c < a_.cycle_count(); ++c) {
      const auto& cy = a_.cycles[c];
      if (!cy.body.empty() || s.cmap[c] != -1) continue;
      const int p = a_.partner[c];
      if (p < 0 || a_.cycles[p].body.empty()) continue;
      const int target = b_.partner[s.cmap[p]];
      if (target < 0 || !b_.cycles[target].body.empty()) return false;
      if (!bind_cycle(s, c, target, 1)) return false;
      if (!bind_vertex(s, cy.anchor, b_.cycles[target].anchor)) return false;
    }
    auto loose = [](const Indexed& ix, const std::vector<int>& mapped) {
      std::vector<std::pair<int, int>> out;  // (lower point cycle, upper point cycle), sorted by level
      for (int c = 0; c < ix.cycle_count(); ++c) {
        if (mapped[c] != -1 || !ix.cycles[c].body.empty() || ix.cycles[c].role != Role::Lower) continue;
        out.emplace_back(c, ix.partner[c]);
      }
      std::stable_sort(out.begin(), out.end(),
                       [&](auto x, auto y) { return ix.cycles[x.first].level < ix.cycles[y.first].level; });
      return out;
    };
    const auto la = loose(a_, s.cmap);
    const auto lb = loose(b_, s.crev);
    if (la.size() != lb.size()) return false;
    for (std::size_t i = 0; i < la.size(); ++i) {
      for (auto [x, y] : {std::pair{la[i].first, lb[i].first}, std::pair{la[i].second, lb[i].second}}) {
        if (x < 0 || y < 0) return false;
        if (a_.cycles[x].level != b_.cycles[y].level || !b_.cycles[y].body.empty()) return false;
        if (!bind_cycle(s, x, y, 1)) return false;
        if (!bind_vertex(s, a_.cycles[x].anchor, b_.cycles[y].anchor)) return false;
      }
    }
    for (int c = 0; c < a_.cycle_count(); ++c) {
      if (s.cmap[c] == -1) return false;
      const int p = a_.partner[c];
      if (p < 0) continue;
      if (b_.partner[s.cmap[c]] != s.cmap[p]) return false;
      const bool both_nonempty = !a_.cycles[c].body.empty() && !a_.cycles[p].body.empty();
      if (both_nonempty && s.cflip[c] != s.cflip[p]) return false;
    }
    if (std::find(s.vmap.begin(), s.vmap.end(), -1) != s.vmap.end()) return false;
    result_ = std::move(s);
    return true;
  }

  const Indexed& a_;
  const Indexed& b_;
  bool allow_flip_;
  SearchState result_;
};

IsoWitness to_witness(const Indexed& a, const Indexed& b, const SearchState& s) {
  IsoWitness w;
  for (int v = 0; v < a.vertex_count(); ++v) w.vertex_map[a.vertex_name[v]] = b.vertex_name[s.vmap[v]];
  for (int e = 0; e < a.edge_count(); ++e) w.edge_map[a.edge_name[e]] = {b.edge_name[s.emap[e]], s.edir[e]};
  for (int c = 0; c < a.cycle_count(); ++c) w.cycle_map[a.cycle_name[c]] = {b.cycle_name[s.cmap[c]], s.cflip[c]};
  return w;
}

std::optional<IsoWitness> search_pair(const DistinguishingGraph& g1, const DistinguishingGraph& g2, bool allow_flip) {
  const Indexed a = detail::index_valid_graph(g1);
  const Indexed b = detail::index_valid_graph(g2);
  IsoSearch search(a, b, allow_flip);
  if (auto s = search.run()) return to_witness(a, b, *s);
  return std::nullopt;
}

bool cyclic_equal(const std::vector<Dart>& x, const std::vector<Dart>& y) {
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  if (n == 0) return true;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = x[i] == y[(i + k) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::optional<IsoWitness> find_isomorphism(const DistinguishingGraph& g1, const DistinguishingGraph& g2, Relation r) {
  require_classifiable(g1);
  require_classifiable(g2);
  if (r == Relation::OrientedConjugacy) return search_pair(g1, g2, false);
  if (auto w = search_pair(g1, g2, true)) return w;
  if (r == Relation::Conjugacy) return std::nullopt;
  if (auto w = search_pair(g1, negate(g2), true)) {
    w->via_negation = true;
    return w;
  }
  return std::nullopt;
}

bool are_related(const DistinguishingGraph& g1, const DistinguishingGraph& g2, Relation r) {
  return find_isomorphism(g1, g2, r).has_value();
}

std::string check_witness(const DistinguishingGraph& g1, const DistinguishingGraph& g2_in, const IsoWitness& w,
                          Relation r) {
  if (w.via_negation && r != Relation::Equivalence) return "negation is only admitted for equivalence";
  const DistinguishingGraph g2 = w.via_negation ? negate(g2_in) : g2_in;

  // vertices
  std::map<std::string, int> level1, level2;
  for (const auto& l : g1.levels)
    for (const auto& v : l.vertices) level1[v] = l.index;
  for (const auto& l : g2.levels)
    for (const auto& v : l.vertices) level2[v] = l.index;
  if (w.vertex_map.size() != level1.size() || level1.size() != level2.size()) return "vertex map is not total";
  std::set<std::string> images;
  for (const auto& [v, img] : w.vertex_map) {
    if (!level1.contains(v) || !level2.contains(img)) return "vertex map names unknown vertex " + v;
    if (level1[v] != level2[img]) return "vertex " + v + " changes level";
    if (!images.insert(img).second) return "vertex map is not injective at " + img;
  }

  // edges
  std::map<std::string, Edge> edges1, edges2;
  std::map<std::string, int> elevel1, elevel2;
  for (const auto& l : g1.levels)
    for (const auto& e : l.edges) edges1[e.name] = e, elevel1[e.name] = l.index;
  for (const auto& l : g2.levels)
    for (const auto& e : l.edges) edges2[e.name] = e, elevel2[e.name] = l.index;
  if (w.edge_map.size() != edges1.size() || edges1.size() != edges2.size()) return "edge map is not total";
  images.clear();
  for (const auto& [name, img] : w.edge_map) {
    if (!edges1.contains(name) || !edges2.contains(img.edge)) return "edge map names unknown edge " + name;
    if (img.direction != 1 && img.direction != -1) return "bad edge direction for " + name;
    if (elevel1[name] != elevel2[img.edge]) return "edge " + name + " changes level";
    if (!images.insert(img.edge).second) return "edge map is not injective at " + img.edge;
    const Edge& e = edges1[name];
    const Edge& f = edges2[img.edge];
    const std::string& t = img.direction > 0 ? f.tail : f.head;
    const std::string& h = img.direction > 0 ? f.head : f.tail;
    if (w.vertex_map.at(e.tail) != t || w.vertex_map.at(e.head) != h) return "edge " + name + " breaks incidence";
  }

  // cycles
  if (w.cycle_map.size() != g1.cycles.size() || g1.cycles.size() != g2.cycles.size()) return "cycle map is not total";
  images.clear();
  for (const auto& c : g1.cycles) {
    auto it = w.cycle_map.find(c.id);
    if (it == w.cycle_map.end()) return "cycle " + c.id + " is unmapped";
    const Cycle* t = g2.find_cycle(it->second.cycle);
    if (t == nullptr) return "cycle map names unknown cycle " + it->second.cycle;
    if (!images.insert(t->id).second) return "cycle map is not injective at " + t->id;
    if (t->level != c.level || t->role != c.role) return "cycle " + c.id + " changes level or role";
    if (c.is_point()) {
      if (!t->is_point() || w.vertex_map.at(c.anchor) != t->anchor) return "point cycle " + c.id + " misplaced";
      continue;
    }
    const int flip = it->second.flip;
    if (flip != 1 && flip != -1) return "bad flip for cycle " + c.id;
    if (r == Relation::OrientedConjugacy && flip < 0) return "cycle " + c.id + " reverses orientation";
    std::vector<Dart> image;
    for (const auto& d : c.body) {
      const auto& ei = w.edge_map.at(d.edge);
      image.push_back({ei.edge, d.direction * ei.direction});
    }
    if (flip < 0) {
      std::reverse(image.begin(), image.end());
      for (auto& d : image) d.direction = -d.direction;
    }
    if (!cyclic_equal(image, t->body)) return "cycle " + c.id + " does not map onto " + t->id;
  }

  // pairings and coupling
  std::set<CylinderPairing> target_pairs(g2.pairings.begin(), g2.pairings.end());
  for (const auto& p : g1.pairings) {
    const auto& lo = w.cycle_map.at(p.lower);
    const auto& up = w.cycle_map.at(p.upper);
    if (!target_pairs.contains({lo.cycle, up.cycle})) return "pairing " + p.lower + "/" + p.upper + " not preserved";
    if (!g1.find_cycle(p.lower)->is_point() && !g1.find_cycle(p.upper)->is_point() && lo.flip != up.flip)
      return "cylinder " + p.lower + "/" + p.upper + " flips only one end";
  }
  return {};
}

}  // namespace dg
