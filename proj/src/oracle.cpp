#include <algorithm>
#include <cmath>
#include <numeric>

#include "dg/classify.hpp"
#include "dg/detail/indexed.hpp"
#include "dg/error.hpp"
#include "dg/transform.hpp"

// Reference decision procedure: enumerate every level-preserving edge
// bijection with every choice of edge directions and every bijection of
// isolated vertices, and test the full definition at each leaf. Shares no
// code with the propagation search.

namespace dg {

using detail::Indexed;

namespace {

class Oracle {
 public:
  Oracle(const Indexed& a, const Indexed& b, bool allow_flip) : a_(a), b_(b), allow_flip_(allow_flip) {
    ea_.resize(a.level_count + 1);
    ia_.resize(a.level_count + 1);
    eb_.resize(b.level_count + 1);
    ib_.resize(b.level_count + 1);
    for (int e = 0; e < a.edge_count(); ++e) ea_[a.edges[e].level].push_back(e);
    for (int e = 0; e < b.edge_count(); ++e) eb_[b.edges[e].level].push_back(e);
    for (int v = 0; v < a.vertex_count(); ++v)
      if (a.degree[v] == 0) ia_[a.vertex_level[v]].push_back(v);
    for (int v = 0; v < b.vertex_count(); ++v)
      if (b.degree[v] == 0) ib_[b.vertex_level[v]].push_back(v);
  }

  double space() const {
    double total = 1;
    for (std::size_t l = 1; l < ea_.size(); ++l) {
      total *= std::tgamma(static_cast<double>(ea_[l].size()) + 1) * std::pow(2.0, static_cast<double>(ea_[l].size()));
      total *= std::tgamma(static_cast<double>(ia_[l].size()) + 1);
    }
    return total;
  }

  bool run() {
    if (a_.level_count != b_.level_count || a_.vertex_count() != b_.vertex_count() ||
        a_.cycle_count() != b_.cycle_count())
      return false;
    for (std::size_t l = 1; l < ea_.size(); ++l)
      if (ea_[l].size() != eb_[l].size() || ia_[l].size() != ib_[l].size()) return false;
    if (space() > kOracleLimit)
      throw SizeGuardError("oracle refuses an instance with " + std::to_string(space()) + " candidate bijections");
    emap_.assign(a_.edge_count(), -1);
    edir_.assign(a_.edge_count(), 0);
    iso_.assign(a_.vertex_count(), -1);
    return edges_at(1);
  }

 private:
  bool edges_at(int level) {
    if (level > a_.level_count) return isolated_at(1);
    const auto& src = ea_[level];
    std::vector<int> perm = eb_[level];
    std::sort(perm.begin(), perm.end());
    const unsigned masks = 1u << src.size();
    do {
      for (unsigned mask = 0; mask < masks; ++mask) {
        for (std::size_t i = 0; i < src.size(); ++i) {
          emap_[src[i]] = perm[i];
          edir_[src[i]] = (mask >> i) & 1u ? -1 : 1;
        }
        if (edges_at(level + 1)) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  bool isolated_at(int level) {
    if (level > a_.level_count) return leaf();
    const auto& src = ia_[level];
    std::vector<int> perm = ib_[level];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < src.size(); ++i) iso_[src[i]] = perm[i];
      if (isolated_at(level + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  bool leaf() const {
    std::vector<int> vmap(a_.vertex_count(), -1), vrev(b_.vertex_count(), -1);
    auto bind = [&](int v, int w) {
      if (vmap[v] == -1 && vrev[w] == -1) {
        vmap[v] = w;
        vrev[w] = v;
        return true;
      }
      return vmap[v] == w;
    };
    for (int e = 0; e < a_.edge_count(); ++e) {
      const auto& x = a_.edges[e];
      const auto& y = b_.edges[emap_[e]];
      if (!bind(x.tail, edir_[e] > 0 ? y.tail : y.head)) return false;
      if (!bind(x.head, edir_[e] > 0 ? y.head : y.tail)) return false;
    }
    for (int v = 0; v < a_.vertex_count(); ++v)
      if (iso_[v] != -1 && !bind(v, iso_[v])) return false;
    for (int v = 0; v < a_.vertex_count(); ++v)
      if (vmap[v] == -1) return false;

    std::vector<int> cmap(a_.cycle_count(), -1), cflip(a_.cycle_count(), 0), crev(b_.cycle_count(), -1);
    for (int c = 0; c < a_.cycle_count(); ++c) {
      const auto& cy = a_.cycles[c];
      int target = -1;
      int flip = 1;
      if (cy.body.empty()) {
        for (int d = 0; d < b_.cycle_count(); ++d) {
          const auto& t = b_.cycles[d];
          if (t.body.empty() && t.role == cy.role && t.anchor == vmap[cy.anchor]) target = d;
        }
        if (target < 0) return false;
      } else {
        std::vector<detail::IxDart> image;
        for (const auto& d : cy.body) image.push_back({emap_[d.edge], d.dir * edir_[d.edge]});
        target = b_.edge_cycle[image.front().edge][detail::role_slot(cy.role)];
        const auto& body = b_.cycles[target].body;
        if (body.size() != image.size()) return false;
        if (matches(image, body)) {
          flip = 1;
        } else {
          std::reverse(image.begin(), image.end());
          for (auto& d : image) d.dir = -d.dir;
          if (!matches(image, body)) return false;
          flip = -1;
        }
        if (flip < 0 && !allow_flip_) return false;
      }
      if (b_.cycles[target].role != cy.role || b_.cycles[target].level != cy.level) return false;
      if (crev[target] != -1) return false;
      cmap[c] = target;
      crev[target] = c;
      cflip[c] = flip;
    }
    for (int c = 0; c < a_.cycle_count(); ++c) {
      const int p = a_.partner[c];
      if (p < 0) continue;
      if (b_.partner[cmap[c]] != cmap[p]) return false;
      if (!a_.cycles[c].body.empty() && !a_.cycles[p].body.empty() && cflip[c] != cflip[p]) return false;
    }
    return true;
  }

  static bool matches(const std::vector<detail::IxDart>& x, const std::vector<detail::IxDart>& y) {
    const std::size_t n = x.size();
    for (std::size_t k = 0; k < n; ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = x[i].edge == y[(i + k) % n].edge && x[i].dir == y[(i + k) % n].dir;
      if (ok) return true;
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  bool allow_flip_;
  std::vector<std::vector<int>> ea_, eb_, ia_, ib_;
  std::vector<int> emap_, edir_, iso_;
};

bool oracle_pair(const DistinguishingGraph& g1, const DistinguishingGraph& g2, bool allow_flip) {
  const Indexed a = detail::index_valid_graph(g1);
  const Indexed b = detail::index_valid_graph(g2);
  return Oracle(a, b, allow_flip).run();
}

}  // namespace

bool oracle_isomorphic(const DistinguishingGraph& g1, const DistinguishingGraph& g2, Relation r) {
  require_classifiable(g1);
  require_classifiable(g2);
  if (r == Relation::OrientedConjugacy) return oracle_pair(g1, g2, false);
  if (oracle_pair(g1, g2, true)) return true;
  return r == Relation::Equivalence && oracle_pair(g1, negate(g2), true);
}

}  // namespace dg
