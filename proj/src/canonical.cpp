#include <algorithm>
#include <deque>
#include <sstream>

#include "dg/classify.hpp"
#include "dg/detail/indexed.hpp"
#include "dg/transform.hpp"

// Canonical labeling. A labeling is generated by a breadth-first walk:
// start at a minimum on level 1, cross each cylinder into the level
// component on its other end, and inside a component label edges in the
// order cycle traversals meet them. The only free choices are the starting
// minimum, the dart at which each component is entered, and (for
// conjugacy) the reading direction of each coupled class of cycles. Every
// choice is made at a structurally determined point, so the set of token
// streams is an isomorphism invariant and its minimum is a canonical key.

namespace dg {

using detail::Indexed;

namespace {

enum Token : int { kNode = -1, kCycle = -2, kEdge = -3, kPair = -4 };

struct Labeling {
  std::vector<int> vlabel, elabel, eorient, clabel;
  std::vector<int> eps;  // per coupling class: 0 undecided, else +-1
  std::vector<int> node_state;
  int next_v = 0, next_e = 0, next_c = 0;
  std::deque<std::pair<int, int>> node_queue;  // (node, entry cycle)
  std::deque<std::pair<int, int>> tasks;       // (cycle, start position)
  int current_node = -1;
  std::vector<int> node_cycles;                // cycles labeled in the current node
  std::vector<std::vector<std::pair<int, int>>> cbody;  // by cycle label: (edge label, dir)
  std::vector<int> label_cycle;                // cycle label -> cycle
  std::vector<int> tokens;
};

struct Choice {
  enum Kind { Done, Start, Eps } kind;
  int subject;  // entry cycle for Start, coupling class for Eps
};

class Canonizer {
 public:
  Canonizer(const Indexed& ix, bool allow_flip) : ix_(ix), allow_flip_(allow_flip) {
    detail::DisjointSets comps(ix.vertex_count());
    for (const auto& e : ix.edges) comps.unite(e.tail, e.head);
    node_of_vertex_.assign(ix.vertex_count(), -1);
    int nodes = 0;
    for (int v = 0; v < ix.vertex_count(); ++v) {
      const int r = comps.find(v);
      if (node_of_vertex_[r] == -1) {
        node_of_vertex_[r] = nodes++;
        node_level_.push_back(ix.vertex_level[v]);
      }
      node_of_vertex_[v] = node_of_vertex_[r];
    }
    node_count_ = nodes;
    detail::DisjointSets coupling(ix.cycle_count());
    for (int c = 0; c < ix.cycle_count(); ++c) {
      const auto& cy = ix.cycles[c];
      node_of_cycle_.push_back(node_of_vertex_[cy.body.empty() ? cy.anchor : ix.edges[cy.body.front().edge].tail]);
      const int p = ix.partner[c];
      if (p >= 0 && !cy.body.empty() && !ix.cycles[p].body.empty()) coupling.unite(c, p);
    }
    for (int c = 0; c < ix.cycle_count(); ++c) class_of_.push_back(coupling.find(c));
  }

  const Labeling& run() {
    for (int c = 0; c < ix_.cycle_count(); ++c) {
      const auto& cy = ix_.cycles[c];
      if (cy.level != 1 || !cy.body.empty()) continue;
      Labeling s = fresh();
      s.node_state[node_of_cycle_[c]] = 1;
      s.node_queue.emplace_back(node_of_cycle_[c], c);
      explore(std::move(s));
    }
    return best_;
  }

 private:
  Labeling fresh() const {
    Labeling s;
    s.vlabel.assign(ix_.vertex_count(), -1);
    s.elabel.assign(ix_.edge_count(), -1);
    s.eorient.assign(ix_.edge_count(), 0);
    s.clabel.assign(ix_.cycle_count(), -1);
    s.eps.assign(ix_.cycle_count(), allow_flip_ ? 0 : 1);
    s.node_state.assign(node_count_, 0);
    return s;
  }

  void label_vertex(Labeling& s, int v) const {
    if (s.vlabel[v] == -1) s.vlabel[v] = s.next_v++;
  }

  void traverse(Labeling& s, int c, int start) const {
    const auto& cy = ix_.cycles[c];
    const int eps = s.eps[class_of_[c]];
    const int len = static_cast<int>(cy.body.size());
    s.clabel[c] = s.next_c++;
    s.label_cycle.push_back(c);
    s.node_cycles.push_back(c);
    s.cbody.emplace_back();
    s.tokens.insert(s.tokens.end(), {kCycle, static_cast<int>(cy.role), len});
    for (int t = 0; t < len; ++t) {
      const auto& d = cy.body[((start + eps * t) % len + len) % len];
      const int eff = eps * d.dir;
      if (s.elabel[d.edge] == -1) {
        s.elabel[d.edge] = s.next_e++;
        s.eorient[d.edge] = eff;
        const auto& e = ix_.edges[d.edge];
        const int lt = eff > 0 ? e.tail : e.head;
        const int lh = eff > 0 ? e.head : e.tail;
        label_vertex(s, lt);
        label_vertex(s, lh);
        s.tokens.insert(s.tokens.end(), {kEdge, s.vlabel[lt], s.vlabel[lh]});
        for (int slot = 0; slot < 2; ++slot)
          s.tasks.emplace_back(ix_.edge_cycle[d.edge][slot], ix_.edge_pos[d.edge][slot]);
      }
      const int dir = eff * s.eorient[d.edge];
      s.cbody.back().emplace_back(s.elabel[d.edge], dir);
      s.tokens.push_back(2 * s.elabel[d.edge] + (dir < 0 ? 1 : 0));
    }
  }

  Choice advance(Labeling& s) const {
    for (;;) {
      if (!s.tasks.empty()) {
        const auto [c, pos] = s.tasks.front();
        if (s.clabel[c] != -1) {
          s.tasks.pop_front();
          continue;
        }
        if (s.eps[class_of_[c]] == 0) return {Choice::Eps, class_of_[c]};
        s.tasks.pop_front();
        traverse(s, c, pos);
        continue;
      }
      if (s.current_node != -1) {
        for (int c : s.node_cycles) {
          const int q = ix_.partner[c];
          if (q < 0 || s.node_state[node_of_cycle_[q]] != 0) continue;
          s.node_state[node_of_cycle_[q]] = 1;
          s.node_queue.emplace_back(node_of_cycle_[q], q);
        }
        s.node_cycles.clear();
        s.current_node = -1;
        continue;
      }
      if (!s.node_queue.empty()) {
        const auto [node, entry] = s.node_queue.front();
        s.node_queue.pop_front();
        s.node_state[node] = 2;
        s.current_node = node;
        const int via = ix_.partner[entry];
        s.tokens.insert(s.tokens.end(), {kNode, node_level_[node], via < 0 ? -1 : s.clabel[via]});
        const auto& cy = ix_.cycles[entry];
        if (cy.body.empty()) {
          label_vertex(s, cy.anchor);
          s.clabel[entry] = s.next_c++;
          s.label_cycle.push_back(entry);
          s.node_cycles.push_back(entry);
          s.cbody.emplace_back();
          s.tokens.insert(s.tokens.end(), {kCycle, static_cast<int>(cy.role), 0, s.vlabel[cy.anchor]});
          continue;
        }
        return {Choice::Start, entry};
      }
      std::vector<std::pair<int, int>> pairs;
      for (int c = 0; c < ix_.cycle_count(); ++c)
        if (ix_.cycles[c].role == Role::Lower && ix_.partner[c] >= 0)
          pairs.emplace_back(s.clabel[c], s.clabel[ix_.partner[c]]);
      std::sort(pairs.begin(), pairs.end());
      for (auto [lo, up] : pairs) s.tokens.insert(s.tokens.end(), {kPair, lo, up});
      return {Choice::Done, -1};
    }
  }

  // True if no completion of `tokens` can beat the best stream found so far.
  bool dominated(const std::vector<int>& tokens) const {
    if (!have_best_) return false;
    const auto& best = best_.tokens;
    const std::size_t n = std::min(tokens.size(), best.size());
    for (std::size_t i = 0; i < n; ++i)
      if (tokens[i] != best[i]) return tokens[i] > best[i];
    return tokens.size() > best.size();
  }

  void explore(Labeling s) {
    const Choice ch = advance(s);
    if (dominated(s.tokens)) return;
    switch (ch.kind) {
      case Choice::Done:
        if (!have_best_ || s.tokens < best_.tokens) {
          best_ = std::move(s);
          have_best_ = true;
        }
        return;
      case Choice::Start: {
        const int len = static_cast<int>(ix_.cycles[ch.subject].body.size());
        for (int pos = 0; pos < len; ++pos) {
          Labeling child = s;
          child.tasks.emplace_back(ch.subject, pos);
          explore(std::move(child));
        }
        return;
      }
      case Choice::Eps:
        for (int eps : {+1, -1}) {
          Labeling child = s;
          child.eps[ch.subject] = eps;
          explore(std::move(child));
        }
        return;
    }
  }

  const Indexed& ix_;
  bool allow_flip_;
  std::vector<int> node_of_vertex_, node_level_, node_of_cycle_, class_of_;
  int node_count_ = 0;
  Labeling best_;
  bool have_best_ = false;
};

struct Canon {
  Indexed ix;
  Labeling labeling;
};

Canon canonize(const DistinguishingGraph& g, bool allow_flip) {
  Canon out{detail::index_valid_graph(g), {}};
  out.labeling = Canonizer(out.ix, allow_flip).run();
  return out;
}

Canon best_canon(const DistinguishingGraph& g, Relation r) {
  require_classifiable(g);
  if (r == Relation::OrientedConjugacy) return canonize(g, false);
  Canon c = canonize(g, true);
  if (r == Relation::Equivalence) {
    Canon n = canonize(negate(g), true);
    if (n.labeling.tokens < c.labeling.tokens) return n;
  }
  return c;
}

}  // namespace

std::string canonical_key(const DistinguishingGraph& g, Relation r) {
  const Canon c = best_canon(g, r);
  std::ostringstream out;
  for (std::size_t i = 0; i < c.labeling.tokens.size(); ++i) out << (i ? "," : "") << c.labeling.tokens[i];
  return out.str();
}

DistinguishingGraph canonical_form(const DistinguishingGraph& g, Relation r) {
  const Canon c = best_canon(g, r);
  const Indexed& ix = c.ix;
  const Labeling& s = c.labeling;
  auto vname = [](int l) { return "v" + std::to_string(l); };
  auto ename = [](int l) { return "e" + std::to_string(l); };
  auto cname = [](int l) { return "c" + std::to_string(l); };

  DistinguishingGraph out;
  for (int i = 1; i <= ix.level_count; ++i) out.levels.push_back({i, {}, {}});
  for (int v = 0; v < ix.vertex_count(); ++v) out.levels[ix.vertex_level[v] - 1].vertices.push_back(vname(s.vlabel[v]));
  for (int e = 0; e < ix.edge_count(); ++e) {
    const auto& ed = ix.edges[e];
    const int t = s.eorient[e] > 0 ? ed.tail : ed.head;
    const int h = s.eorient[e] > 0 ? ed.head : ed.tail;
    out.levels[ed.level - 1].edges.push_back({ename(s.elabel[e]), vname(s.vlabel[t]), vname(s.vlabel[h])});
  }
  for (int label = 0; label < static_cast<int>(s.label_cycle.size()); ++label) {
    const auto& cy = ix.cycles[s.label_cycle[label]];
    Cycle out_c{cname(label), cy.level, cy.role, {}, {}};
    if (cy.body.empty()) out_c.anchor = vname(s.vlabel[cy.anchor]);
    for (auto [edge, dir] : s.cbody[label]) out_c.body.push_back({ename(edge), dir});
    out.cycles.push_back(std::move(out_c));
  }
  for (int c = 0; c < ix.cycle_count(); ++c)
    if (ix.cycles[c].role == Role::Lower && ix.partner[c] >= 0)
      out.pairings.push_back({cname(s.clabel[c]), cname(s.clabel[ix.partner[c]])});
  return canonical_order(out);
}

}  // namespace dg
