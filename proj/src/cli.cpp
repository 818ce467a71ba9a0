#include "dg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dg/classify.hpp"
#include "dg/error.hpp"
#include "dg/text_format.hpp"
#include "dg/topology.hpp"
#include "dg/transform.hpp"
#include "dg/validate.hpp"
#include "dg/word.hpp"

namespace dg {
namespace {

constexpr int kUsage = 2;

DocumentModel load(const std::string& path, std::istream& in) {
  if (path == "-") return parse_text(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return parse_text(file);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const DocumentModel& doc, std::ostream& out) {
  const ValidationReport report = validate(doc.graph);
  if (report.ok()) {
    out << "valid\n";
    return 0;
  }
  for (const auto& v : report.violations) {
    if (int line = doc.line_of(v.subject); line > 0) out << "line " << line << ": ";
    out << to_string(v.kind) << " " << v.subject << ": " << v.message << "\n";
  }
  out << report.violations.size() << " violation(s)\n";
  return 1;
}

int cmd_info(const DocumentModel& doc, bool json, std::ostream& out) {
  const SurfaceReport r = surface_report(doc.graph);
  if (json) {
    nlohmann::ordered_json j;
    j["connected"] = r.connected;
    j["realizable"] = r.realizable;
    j["orientable"] = r.orientable ? nlohmann::ordered_json(*r.orientable) : nullptr;
    j["euler_characteristic"] = r.euler_characteristic;
    j["genus"] = r.genus ? nlohmann::ordered_json(*r.genus) : nullptr;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : r.vertex_reports)
      j["vertices"].push_back({{"vertex", v.vertex},
                               {"level", v.level},
                               {"degree", v.degree},
                               {"k", v.local_degree},
                               {"index", v.index},
                               {"kind", std::string(to_string(v.kind))},
                               {"link_components", v.link_components}});
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "connected: " << yes_no(r.connected) << "\n";
  out << "realizable: " << yes_no(r.realizable) << "\n";
  out << "orientable: " << (r.orientable ? yes_no(*r.orientable) : "undefined") << "\n";
  out << "euler_characteristic: " << r.euler_characteristic << "\n";
  out << "genus: " << (r.genus ? std::to_string(*r.genus) : "undefined") << "\n";
  std::size_t width = 6;
  for (const auto& v : r.vertex_reports) width = std::max(width, v.vertex.size());
  out << std::left << std::setw(static_cast<int>(width)) << "vertex"
      << "  level  degree   k  index  kind    links\n";
  for (const auto& v : r.vertex_reports) {
    out << std::left << std::setw(static_cast<int>(width)) << v.vertex << std::right << "  " << std::setw(5)
        << v.level << "  " << std::setw(6) << v.degree << "  " << std::setw(2) << v.local_degree << "  "
        << std::setw(5) << v.index << "  " << std::left << std::setw(6) << to_string(v.kind) << "  " << std::right
        << v.link_components << "\n";
  }
  return 0;
}

Relation relation_of(const std::string& s) {
  auto r = parse_relation(s);
  if (!r) throw InputError("unknown relation '" + s + "'");
  return *r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguishing graphs of surface functions", "dgtool"};
  app.require_subcommand(1);

  std::string file, file2, relation, word, surface;
  bool json = false;
  const std::string relations = "oriented-conjugate|conjugate|equivalent";
  const CLI::IsMember relation_names({"oriented-conjugate", "conjugate", "equivalent"});

  auto* validate_cmd = app.add_subcommand("validate", "check structural invariants");
  validate_cmd->add_option("FILE", file, "graph file, '-' for stdin")->required();

  auto* info_cmd = app.add_subcommand("info", "surface and vertex invariants");
  info_cmd->add_option("FILE", file)->required();
  info_cmd->add_flag("--json", json, "machine-readable output");

  auto* canon_cmd = app.add_subcommand("canon", "canonical key and form");
  canon_cmd->add_option("FILE", file)->required();
  canon_cmd->add_option("--relation", relation, relations)->required()->check(relation_names);

  auto* compare_cmd = app.add_subcommand("compare", "decide a relation between two graphs");
  compare_cmd->add_option("FILE1", file)->required();
  compare_cmd->add_option("FILE2", file2)->required();
  compare_cmd->add_option("--relation", relation, relations)->required()->check(relation_names);

  auto* w2g_cmd = app.add_subcommand("word2graph", "graph of a minimal-function word");
  w2g_cmd->add_option("--word", word)->required();

  auto* g2w_cmd = app.add_subcommand("graph2word", "word of a minimal-function graph");
  g2w_cmd->add_option("FILE", file)->required();

  auto* enum_cmd = app.add_subcommand("enum", "enumerate minimal functions");
  enum_cmd->add_option("--surface", surface, "g0, g1, ..., n1, n2, ...")->required();
  enum_cmd->add_option("--relation", relation, relations)->required()->check(relation_names);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (validate_cmd->parsed()) {
      code = cmd_validate(load(file, in), buf);
    } else if (info_cmd->parsed()) {
      code = cmd_info(load(file, in), json, buf);
    } else if (canon_cmd->parsed()) {
      const Relation r = relation_of(relation);
      const DistinguishingGraph g = smooth(load(file, in).graph);
      buf << "key: " << canonical_key(g, r) << "\n" << serialize_text(canonical_form(g, r));
    } else if (compare_cmd->parsed()) {
      const Relation r = relation_of(relation);
      if (file == "-" && file2 == "-") throw InputError("only one input can be read from stdin");
      const DistinguishingGraph g1 = smooth(load(file, in).graph);
      const DistinguishingGraph g2 = smooth(load(file2, in).graph);
      const bool related = are_related(g1, g2, r);
      buf << (related ? "related" : "not-related") << "\n";
      code = related ? 0 : 1;
    } else if (w2g_cmd->parsed()) {
      buf << serialize_text(word_to_graph(parse_word(word)));
    } else if (g2w_cmd->parsed()) {
      buf << format_word(normalize(graph_to_word(load(file, in).graph))) << "\n";
    } else if (enum_cmd->parsed()) {
      const MinimalEnumeration e = enumerate_minimal(parse_surface(surface), relation_of(relation));
      for (const auto& rep : e.representatives()) buf << rep << "\n";
      buf << "count: " << e.count << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << buf.str() << std::flush;
  return code;
}

}  // namespace dg
