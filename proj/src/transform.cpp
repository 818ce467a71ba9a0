#include "dg/transform.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "dg/validate.hpp"

namespace dg {

namespace {

struct Removable {
  LevelGraph* level;
  std::string vertex;
  std::size_t first, second;  // indices into level->edges, first has the smaller name
};

std::optional<Removable> find_removable(DistinguishingGraph& g) {
  for (auto& l : g.levels) {
    std::vector<std::string> vs = l.vertices;
    std::sort(vs.begin(), vs.end());
    for (const auto& v : vs) {
      std::vector<std::size_t> incident;
      int degree = 0;
      bool loop = false;
      for (std::size_t i = 0; i < l.edges.size(); ++i) {
        const Edge& e = l.edges[i];
        if (e.tail != v && e.head != v) continue;
        incident.push_back(i);
        degree += (e.tail == v) + (e.head == v);
        loop = loop || e.is_loop();
      }
      if (degree != 2 || loop) continue;
      std::size_t a = incident[0], b = incident[1];
      if (l.edges[b].name < l.edges[a].name) std::swap(a, b);
      return Removable{&l, v, a, b};
    }
  }
  return std::nullopt;
}

void remove_vertex(DistinguishingGraph& g, const Removable& r) {
  LevelGraph& l = *r.level;
  const Edge keep = l.edges[r.first];
  const Edge drop = l.edges[r.second];
  const std::string& x2 = drop.tail == r.vertex ? drop.head : drop.tail;

  Edge merged = keep;
  if (keep.head == r.vertex)
    merged.head = x2;
  else
    merged.tail = x2;

  for (auto& c : g.cycles) {
    if (c.level != l.index || c.body.empty()) continue;
    auto it = std::find_if(c.body.begin(), c.body.end(), [&](const Dart& d) { return d.edge == keep.name; });
    if (it == c.body.end()) continue;
    // The merged dart keeps the direction of `keep`'s dart; the partner dart
    // of `drop` sits right next to it (cyclically) and disappears.
    auto other = std::find_if(c.body.begin(), c.body.end(), [&](const Dart& d) { return d.edge == drop.name; });
    c.body.erase(other);
  }
  l.edges[r.first] = merged;
  l.edges.erase(l.edges.begin() + static_cast<std::ptrdiff_t>(r.second));
  l.vertices.erase(std::find(l.vertices.begin(), l.vertices.end(), r.vertex));
}

std::string fresh(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (int k = 2; taken.contains(name); ++k) name = base + std::to_string(k);
  taken.insert(name);
  return name;
}

}  // namespace

DistinguishingGraph smooth(const DistinguishingGraph& input) {
  require_valid(input);
  DistinguishingGraph g = input;
  while (auto r = find_removable(g)) remove_vertex(g, *r);
  return g;
}

bool is_smooth(const DistinguishingGraph& input) {
  DistinguishingGraph g = input;
  return !find_removable(g).has_value();
}

DistinguishingGraph subdivide_loops(const DistinguishingGraph& input) {
  require_valid(input);
  DistinguishingGraph g = input;
  std::set<std::string> vertex_names, edge_names;
  for (const auto& l : g.levels) {
    vertex_names.insert(l.vertices.begin(), l.vertices.end());
    for (const auto& e : l.edges) edge_names.insert(e.name);
  }
  // old loop name -> (first half, second half)
  std::map<std::string, std::pair<std::string, std::string>> split;
  for (auto& l : g.levels) {
    std::vector<Edge> edges;
    for (const auto& e : l.edges) {
      if (!e.is_loop()) {
        edges.push_back(e);
        continue;
      }
      const std::string mid = fresh(e.name + "_m", vertex_names);
      const std::string a = fresh(e.name + "_1", edge_names);
      const std::string b = fresh(e.name + "_2", edge_names);
      l.vertices.push_back(mid);
      edges.push_back({a, e.tail, mid});
      edges.push_back({b, mid, e.head});
      split.emplace(e.name, std::pair{a, b});
    }
    l.edges = std::move(edges);
  }
  for (auto& c : g.cycles) {
    std::vector<Dart> body;
    for (const auto& d : c.body) {
      auto it = split.find(d.edge);
      if (it == split.end()) {
        body.push_back(d);
      } else if (d.direction > 0) {
        body.push_back({it->second.first, +1});
        body.push_back({it->second.second, +1});
      } else {
        body.push_back({it->second.second, -1});
        body.push_back({it->second.first, -1});
      }
    }
    c.body = std::move(body);
  }
  return g;
}

DistinguishingGraph negate(const DistinguishingGraph& input) {
  require_valid(input);
  DistinguishingGraph g = input;
  const int n = g.level_count();
  for (auto& l : g.levels) l.index = n + 1 - l.index;
  std::reverse(g.levels.begin(), g.levels.end());
  for (auto& c : g.cycles) {
    c.level = n + 1 - c.level;
    c.role = opposite(c.role);
  }
  for (auto& p : g.pairings) std::swap(p.lower, p.upper);
  return g;
}

DistinguishingGraph mirror(const DistinguishingGraph& input) {
  require_valid(input);
  DistinguishingGraph g = input;
  for (auto& c : g.cycles) {
    std::reverse(c.body.begin(), c.body.end());
    for (auto& d : c.body) d.direction = -d.direction;
  }
  return g;
}

}  // namespace dg
