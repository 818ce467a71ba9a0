#include "dg/text_format.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "dg/error.hpp"

namespace dg {

int DocumentModel::line_of(std::string_view subject) const {
  const std::string key(subject);
  for (const auto* table : {&cycle_line, &edge_line, &vertex_line}) {
    auto it = table->find(key);
    if (it != table->end()) return it->second;
  }
  // pairing subjects read "lower/upper"
  for (std::size_t i = 0; i < graph.pairings.size(); ++i)
    if (graph.pairings[i].lower + "/" + graph.pairings[i].upper == subject) return pair_line[i];
  return 0;
}

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back({w, number});
  }
  return out;
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') return false;
  return true;
}

bool is_keyword(std::string_view s) {
  return s == "dg" || s == "levels" || s == "level" || s == "vertex" || s == "edge" || s == "cycle" || s == "pair";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  DocumentModel run() {
    header();
    while (pos_ < toks_.size()) statement();
    if (levels_declared_ == 0) fail(last_line(), "missing 'levels' statement");
    if (doc_.graph.level_count() != levels_declared_)
      fail(last_line(), "declared " + std::to_string(levels_declared_) + " levels but found " +
                            std::to_string(doc_.graph.level_count()));
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(int line, const std::string& msg) const { throw ParseError(line, msg); }

  int last_line() const { return toks_.empty() ? 1 : toks_.back().line; }

  const Token& take(std::string_view what) {
    if (pos_ >= toks_.size()) fail(last_line(), "unexpected end of input, expected " + std::string(what));
    return toks_[pos_++];
  }

  std::string name(std::string_view what) {
    const Token& t = take(what);
    if (!is_name(t.text)) fail(t.line, "expected " + std::string(what) + ", got '" + t.text + "'");
    return t.text;
  }

  int integer(std::string_view what) {
    const Token& t = take(what);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t.line, "expected " + std::string(what) + ", got '" + t.text + "'");
    return v;
  }

  void header() {
    const Token& t = take("'dg' header");
    if (t.text != "dg") fail(t.line, "documents start with 'dg 1'");
    const int line = t.line;
    if (integer("format version") != 1) fail(line, "unsupported format version");
  }

  void statement() {
    const Token& kw = take("statement");
    const int line = kw.line;
    if (kw.text == "levels") {
      if (levels_declared_ != 0 || !doc_.graph.levels.empty()) fail(line, "'levels' must appear once, before any level");
      levels_declared_ = integer("level count");
      if (levels_declared_ < 1) fail(line, "level count must be positive");
    } else if (kw.text == "level") {
      if (levels_declared_ == 0) fail(line, "'levels' must come first");
      if (!doc_.graph.pairings.empty()) fail(line, "levels cannot follow pair statements");
      const int index = integer("level index");
      if (index != doc_.graph.level_count() + 1)
        fail(line, "level " + std::to_string(index) + " out of order (expected " +
                       std::to_string(doc_.graph.level_count() + 1) + ")");
      if (index > levels_declared_) fail(line, "level " + std::to_string(index) + " exceeds declared count");
      doc_.graph.levels.push_back({index, {}, {}});
    } else if (kw.text == "vertex") {
      LevelGraph& l = current(line);
      const std::string v = name("vertex name");
      if (!doc_.vertex_line.emplace(v, line).second) fail(line, "duplicate vertex '" + v + "'");
      vertex_level_[v] = l.index;
      l.vertices.push_back(v);
    } else if (kw.text == "edge") {
      LevelGraph& l = current(line);
      Edge e{name("edge name"), name("tail vertex"), name("head vertex")};
      if (!doc_.edge_line.emplace(e.name, line).second) fail(line, "duplicate edge '" + e.name + "'");
      for (const auto* v : {&e.tail, &e.head}) {
        auto it = vertex_level_.find(*v);
        if (it == vertex_level_.end()) fail(line, "edge '" + e.name + "' names undeclared vertex '" + *v + "'");
        if (it->second != l.index) fail(line, "edge '" + e.name + "' joins vertex '" + *v + "' from another level");
      }
      edge_level_[e.name] = l.index;
      l.edges.push_back(std::move(e));
    } else if (kw.text == "cycle") {
      cycle(line);
    } else if (kw.text == "pair") {
      pair(line);
    } else {
      fail(line, "unknown token '" + kw.text + "'");
    }
  }

  LevelGraph& current(int line) {
    if (doc_.graph.levels.empty()) fail(line, "statement outside of a level");
    if (!doc_.graph.pairings.empty()) fail(line, "level statements cannot follow pair statements");
    return doc_.graph.levels.back();
  }

  void cycle(int line) {
    LevelGraph& l = current(line);
    Cycle c;
    c.id = name("cycle name");
    c.level = l.index;
    const Token& role = take("cycle role");
    if (role.text == "lower")
      c.role = Role::Lower;
    else if (role.text == "upper")
      c.role = Role::Upper;
    else
      fail(role.line, "cycle role must be 'lower' or 'upper', got '" + role.text + "'");
    if (!doc_.cycle_line.emplace(c.id, line).second) fail(line, "duplicate cycle '" + c.id + "'");

    const Token& first = take("cycle body");
    if (first.text.starts_with("@")) {
      c.anchor = first.text.size() > 1 ? first.text.substr(1) : name("anchor vertex");
      auto it = vertex_level_.find(c.anchor);
      if (it == vertex_level_.end()) fail(line, "cycle '" + c.id + "' anchors at undeclared vertex '" + c.anchor + "'");
      if (it->second != l.index) fail(line, "cycle '" + c.id + "' anchors at a vertex of another level");
    } else {
      --pos_;
      while (pos_ < toks_.size() && !is_keyword(toks_[pos_].text)) {
        const Token& t = toks_[pos_++];
        const char sign = t.text.empty() ? '\0' : t.text.back();
        const std::string edge = t.text.substr(0, t.text.size() - 1);
        if ((sign != '+' && sign != '-') || !is_name(edge))
          fail(t.line, "expected a dart like 'e+' or 'e-', got '" + t.text + "'");
        auto it = edge_level_.find(edge);
        if (it == edge_level_.end()) fail(t.line, "cycle '" + c.id + "' uses undeclared edge '" + edge + "'");
        if (it->second != l.index) fail(t.line, "cycle '" + c.id + "' uses edge '" + edge + "' from another level");
        c.body.push_back({edge, sign == '+' ? +1 : -1});
      }
      if (c.body.empty()) fail(line, "cycle '" + c.id + "' has no darts");
    }
    cycle_info_[c.id] = {c.level, c.role};
    doc_.graph.cycles.push_back(std::move(c));
  }

  void pair(int line) {
    if (doc_.graph.level_count() != levels_declared_)
      fail(line, "pair statements come after all " + std::to_string(levels_declared_) + " levels");
    CylinderPairing p{name("lower cycle"), name("upper cycle")};
    for (const auto* id : {&p.lower, &p.upper})
      if (!cycle_info_.contains(*id)) fail(line, "pair names undeclared cycle '" + *id + "'");
    const auto [lo_level, lo_role] = cycle_info_.at(p.lower);
    const auto [up_level, up_role] = cycle_info_.at(p.upper);
    if (lo_role != Role::Lower || up_role != Role::Upper)
      fail(line, "pair expects a lower cycle then an upper cycle ('" + p.lower + "' is " +
                     std::string(to_string(lo_role)) + ", '" + p.upper + "' is " + std::string(to_string(up_role)) +
                     ")");
    if (up_level != lo_level + 1) fail(line, "paired cycles must lie on consecutive levels");
    doc_.pair_line.push_back(line);
    doc_.graph.pairings.push_back(std::move(p));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int levels_declared_ = 0;
  DocumentModel doc_;
  std::map<std::string, int> vertex_level_, edge_level_;
  std::map<std::string, std::pair<int, Role>> cycle_info_;
};

}  // namespace

DocumentModel parse_text(std::istream& in) { return Parser(tokenize(in)).run(); }

DocumentModel parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_text(in);
}

std::string serialize_text(const DistinguishingGraph& input) {
  const DistinguishingGraph g = canonical_order(input);
  std::ostringstream out;
  out << "dg 1\n";
  out << "levels " << g.level_count() << "\n";
  for (const auto& l : g.levels) {
    out << "level " << l.index << "\n";
    for (const auto& v : l.vertices) out << "vertex " << v << "\n";
    for (const auto& e : l.edges) out << "edge " << e.name << " " << e.tail << " " << e.head << "\n";
    for (const auto& c : g.cycles) {
      if (c.level != l.index) continue;
      out << "cycle " << c.id << " " << to_string(c.role);
      if (c.is_point()) out << " @" << c.anchor;
      for (const auto& d : c.body) out << " " << d.edge << (d.direction > 0 ? "+" : "-");
      out << "\n";
    }
  }
  for (const auto& p : g.pairings) out << "pair " << p.lower << " " << p.upper << "\n";
  return out.str();
}

}  // namespace dg
