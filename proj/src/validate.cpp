#include "dg/validate.hpp"

#include <map>
#include <set>
#include <sstream>

#include "dg/error.hpp"

namespace dg {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Structural: return "structural";
    case ViolationKind::Level: return "level";
    case ViolationKind::Role: return "role";
    case ViolationKind::ClosedWalk: return "closed-walk";
    case ViolationKind::Coverage: return "coverage";
    case ViolationKind::Anchor: return "anchor";
    case ViolationKind::Pairing: return "pairing";
    case ViolationKind::Parity: return "parity";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind, std::string_view subject) const {
  for (const auto& v : violations)
    if (v.kind == kind && v.subject == subject) return true;
  return false;
}

namespace {

struct EdgeInfo {
  int level;
  std::string tail, head;
  bool resolved;
};

class Validator {
 public:
  explicit Validator(const DistinguishingGraph& g) : g_(g) {}

  ValidationReport run() {
    check_levels();
    collect_vertices_and_edges();
    check_cycles();
    check_coverage_and_anchors();
    check_parity();
    check_pairings();
    return std::move(report_);
  }

 private:
  void add(ViolationKind kind, std::string subject, std::string message) {
    report_.violations.push_back({kind, std::move(subject), std::move(message)});
  }

  void check_levels() {
    n_ = g_.level_count();
    if (n_ < 2) add(ViolationKind::Level, "levels", "a distinguishing graph needs at least two levels");
    for (int i = 0; i < n_; ++i) {
      if (g_.levels[i].index != i + 1) {
        add(ViolationKind::Level, "level " + std::to_string(g_.levels[i].index),
            "levels must be numbered 1.." + std::to_string(n_) + " in order");
      }
    }
  }

  void collect_vertices_and_edges() {
    for (const auto& l : g_.levels) {
      for (const auto& v : l.vertices) {
        if (!vertex_level_.emplace(v, l.index).second)
          add(ViolationKind::Structural, v, "duplicate vertex identifier");
        degree_.emplace(v, 0);
      }
    }
    for (const auto& l : g_.levels) {
      for (const auto& e : l.edges) {
        bool ok = true;
        for (const auto* end : {&e.tail, &e.head}) {
          auto it = vertex_level_.find(*end);
          if (it == vertex_level_.end()) {
            add(ViolationKind::Structural, e.name, "endpoint '" + *end + "' is not a vertex");
            ok = false;
          } else if (it->second != l.index) {
            add(ViolationKind::Structural, e.name, "endpoint '" + *end + "' lies on another level");
            ok = false;
          }
        }
        if (!edges_.emplace(e.name, EdgeInfo{l.index, e.tail, e.head, ok}).second) {
          add(ViolationKind::Structural, e.name, "duplicate edge identifier");
          continue;
        }
        if (ok) {
          degree_[e.tail] += 1;
          degree_[e.head] += 1;
        }
      }
    }
  }

  void check_cycles() {
    std::set<std::string> ids;
    for (const auto& c : g_.cycles) {
      if (!ids.insert(c.id).second) add(ViolationKind::Structural, c.id, "duplicate cycle identifier");
      if (c.level < 1 || c.level > n_) {
        add(ViolationKind::Structural, c.id, "cycle level " + std::to_string(c.level) + " does not exist");
        continue;
      }
      if (c.level == 1 && c.role == Role::Upper && n_ >= 2)
        add(ViolationKind::Role, c.id, "the first level carries only lower cycles");
      if (c.level == n_ && c.role == Role::Lower && n_ >= 2)
        add(ViolationKind::Role, c.id, "the last level carries only upper cycles");

      if (c.is_point()) {
        auto it = vertex_level_.find(c.anchor);
        if (c.anchor.empty() || it == vertex_level_.end()) {
          add(ViolationKind::Structural, c.id, "point cycle anchor '" + c.anchor + "' is not a vertex");
        } else if (it->second != c.level) {
          add(ViolationKind::Structural, c.id, "point cycle anchor lies on another level");
        } else {
          anchors_[c.anchor] += 1;
        }
        continue;
      }
      if (!c.anchor.empty()) add(ViolationKind::Structural, c.id, "a cycle with darts cannot have an anchor");

      bool resolved = true;
      for (const auto& d : c.body) {
        auto it = edges_.find(d.edge);
        if (it == edges_.end()) {
          add(ViolationKind::Structural, c.id, "dart edge '" + d.edge + "' does not exist");
          resolved = false;
        } else if (it->second.level != c.level) {
          add(ViolationKind::Structural, c.id, "dart edge '" + d.edge + "' lies on another level");
          resolved = false;
        } else if (!it->second.resolved) {
          resolved = false;
        } else {
          coverage_[{d.edge, c.role}] += 1;
        }
        if (d.direction != 1 && d.direction != -1) {
          add(ViolationKind::Structural, c.id, "dart direction must be +1 or -1");
          resolved = false;
        }
      }
      if (resolved) check_closed_walk(c);
    }
  }

  void check_closed_walk(const Cycle& c) {
    const std::size_t len = c.body.size();
    for (std::size_t j = 0; j < len; ++j) {
      const Dart& a = c.body[j];
      const Dart& b = c.body[(j + 1) % len];
      const EdgeInfo& ea = edges_.at(a.edge);
      const EdgeInfo& eb = edges_.at(b.edge);
      const std::string& arrive = a.direction > 0 ? ea.head : ea.tail;
      const std::string& leave = b.direction > 0 ? eb.tail : eb.head;
      if (arrive != leave) {
        add(ViolationKind::ClosedWalk, c.id,
            "darts '" + a.edge + "' and '" + b.edge + "' do not meet at a vertex");
        return;
      }
    }
  }

  void check_coverage_and_anchors() {
    for (const auto& [name, info] : edges_) {
      if (!info.resolved) continue;
      for (Role r : {Role::Lower, Role::Upper}) {
        auto it = coverage_.find({name, r});
        int count = it == coverage_.end() ? 0 : it->second;
        if (count != 1) {
          add(ViolationKind::Coverage, name,
              "edge occurs " + std::to_string(count) + " times among " + std::string(to_string(r)) +
                  " cycles (expected exactly once)");
        }
      }
    }
    for (const auto& [v, deg] : degree_) {
      auto it = anchors_.find(v);
      int count = it == anchors_.end() ? 0 : it->second;
      if (deg == 0 && count != 1) {
        add(ViolationKind::Anchor, v,
            "isolated vertex anchors " + std::to_string(count) + " cycles (expected exactly one)");
      } else if (deg != 0 && count != 0) {
        add(ViolationKind::Anchor, v, "point cycle anchored at a vertex with edges");
      }
    }
  }

  void check_parity() {
    for (const auto& [v, deg] : degree_)
      if (deg % 2 != 0)
        add(ViolationKind::Parity, v, "vertex has an odd number (" + std::to_string(deg) + ") of edge-ends");
  }

  void check_pairings() {
    std::map<std::string, const Cycle*> cycles;
    for (const auto& c : g_.cycles) cycles.emplace(c.id, &c);
    std::map<std::string, int> used;
    for (const auto& p : g_.pairings) {
      auto lo = cycles.find(p.lower);
      auto up = cycles.find(p.upper);
      const std::string subject = p.lower + "/" + p.upper;
      if (lo == cycles.end() || up == cycles.end()) {
        add(ViolationKind::Structural, subject,
            "pairing references unknown cycle '" + (lo == cycles.end() ? p.lower : p.upper) + "'");
        continue;
      }
      used[p.lower] += 1;
      used[p.upper] += 1;
      if (lo->second->role != Role::Lower) add(ViolationKind::Pairing, subject, "first cycle of a pairing must be lower");
      if (up->second->role != Role::Upper) add(ViolationKind::Pairing, subject, "second cycle of a pairing must be upper");
      if (up->second->level != lo->second->level + 1)
        add(ViolationKind::Pairing, subject, "paired cycles must lie on consecutive levels, lower one first");
    }
    for (const auto& c : g_.cycles) {
      if (c.level < 1 || c.level > n_) continue;
      const bool needs = (c.role == Role::Lower && c.level < n_) || (c.role == Role::Upper && c.level > 1);
      auto it = used.find(c.id);
      int count = it == used.end() ? 0 : it->second;
      if (needs && count != 1)
        add(ViolationKind::Pairing, c.id, "cycle belongs to " + std::to_string(count) + " pairings (expected one)");
      else if (!needs && count != 0)
        add(ViolationKind::Pairing, c.id, "cycle cannot be paired on this level");
    }
  }

  const DistinguishingGraph& g_;
  ValidationReport report_;
  int n_ = 0;
  std::map<std::string, int> vertex_level_;
  std::map<std::string, int> degree_;
  std::map<std::string, EdgeInfo> edges_;
  std::map<std::pair<std::string, Role>, int> coverage_;
  std::map<std::string, int> anchors_;
};

}  // namespace

ValidationReport validate(const DistinguishingGraph& g) { return Validator(g).run(); }

void require_valid(const DistinguishingGraph& g) {
  auto report = validate(g);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid distinguishing graph";
  for (std::size_t i = 0; i < report.violations.size() && i < 3; ++i) {
    const auto& v = report.violations[i];
    msg << (i == 0 ? ": " : "; ") << to_string(v.kind) << " '" << v.subject << "' " << v.message;
  }
  throw PreconditionError(msg.str());
}

}  // namespace dg
