#pragma once
// JSON and DOT serialization: system descriptors, graph exports, and the
// report types.  All outputs are deterministic for a fixed configuration;
// json::ordered_json preserves insertion order.

#include <fstream>
#include <string>

#include <json.hpp>

#include "domestic.hpp"
#include "version.hpp"

namespace hexforge {

using json = nlohmann::ordered_json;

// ---- system descriptors -------------------------------------------------
// {"kind":"OneF"|"ThreeF","p":int,"k_F":int,"k_E":int?,
//  "modulus_F":[...]?, "modulus_E":[...]?}

inline HexSystem system_from_descriptor(const json& j) {
  if (!j.contains("kind") || !j.contains("p") || !j.contains("k_F"))
    fail(ErrorKind::SyntaxError, "system descriptor needs kind, p, k_F");
  SystemKind kind = parse_system_kind(j.at("kind").get<std::string>());
  int p = j.at("p").get<int>();
  int kF = j.at("k_F").get<int>();
  std::optional<std::vector<int>> mF;
  if (j.contains("modulus_F")) mF = j.at("modulus_F").get<std::vector<int>>();
  FieldPtr F = make_field(p, kF, mF);
  if (kind == SystemKind::OneF) return HexSystem::make(kind, F);
  int kE = j.contains("k_E") ? j.at("k_E").get<int>() : 3 * kF;
  std::optional<std::vector<int>> mE;
  if (j.contains("modulus_E")) mE = j.at("modulus_E").get<std::vector<int>>();
  FieldPtr E = make_field(p, kE, mE);
  return HexSystem::make(kind, F, E);
}

inline json system_descriptor_json(const HexSystem& sys) {
  json j;
  j["kind"] = (sys.kind() == SystemKind::OneF) ? "OneF" : "ThreeF";
  j["p"] = sys.F()->p;
  j["k_F"] = sys.F()->k;
  j["modulus_F"] = sys.F()->modulus;
  if (sys.kind() == SystemKind::ThreeF) {
    j["k_E"] = sys.J()->k;
    j["modulus_E"] = sys.J()->modulus;
  }
  j["class"] = system_class_name(sys.cls());
  j["s"] = sys.s_param();
  j["t"] = sys.t_param();
  return j;
}

inline uint64_t descriptor_hash(const HexSystem& sys) {
  json j = system_descriptor_json(sys);
  std::string s = j.dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// Header carried by every CLI artifact.
inline json run_header(const HexSystem& sys, uint64_t seed, long budget, bool with_timestamp) {
  json j;
  j["artifact_version"] = kVersion;
  j["system"] = system_descriptor_json(sys);
  j["seed"] = seed;
  j["budget"] = budget;
  if (with_timestamp) {
    std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    j["timestamp"] = buf;
  }
  return j;
}

// ---- graph exports --------------------------------------------------------

inline json export_graph_json(const Hexagon& hx) {
  json j;
  j["points"] = json::array();
  for (int i = 0; i < hx.n_points(); ++i)
    j["points"].push_back(json{{"index", i}, {"label", format_element(hx.system(), hx.point(i))}});
  j["lines"] = json::array();
  for (int i = 0; i < hx.n_lines(); ++i)
    j["lines"].push_back(json{{"index", i}, {"label", format_element(hx.system(), hx.line(i))}});
  j["incidences"] = json::array();
  for (int l = 0; l < hx.n_lines(); ++l)
    for (int p : hx.points_of_line(l)) j["incidences"].push_back(json::array({p, l}));
  return j;
}

inline std::string export_graph_dot(const Hexagon& hx) {
  std::string out;
  out += "graph hexagon {\n";
  out += "  // points as circles, lines as boxes\n";
  for (int i = 0; i < hx.n_points(); ++i)
    out += "  p" + std::to_string(i) + " [shape=circle,label=\"" +
           format_element(hx.system(), hx.point(i)) + "\"];\n";
  for (int i = 0; i < hx.n_lines(); ++i)
    out += "  l" + std::to_string(i) + " [shape=box,label=\"" +
           format_element(hx.system(), hx.line(i)) + "\"];\n";
  for (int l = 0; l < hx.n_lines(); ++l)
    for (int p : hx.points_of_line(l))
      out += "  p" + std::to_string(p) + " -- l" + std::to_string(l) + ";\n";
  out += "}\n";
  return out;
}

// ---- report serialization ---------------------------------------------------

inline json axiom_report_json(const AxiomReport& r) {
  json j;
  j["points"] = r.n_points;
  j["lines"] = r.n_lines;
  j["chambers"] = r.n_chambers;
  j["expected_points"] = r.expected_points;
  j["expected_lines"] = r.expected_lines;
  j["girth"] = r.girth;
  j["diameter"] = r.diameter;
  j["points_per_line"] = r.points_per_line;
  j["lines_per_point"] = r.lines_per_point;
  j["thick"] = r.thick;
  j["pass"] = r.pass;
  return j;
}

inline json identity_report_json(const IdentityReport& r) {
  json j = json::array();
  for (const auto& res : r.results) {
    json e;
    e["name"] = res.name;
    e["pass"] = res.pass;
    if (!res.pass) e["counterexample"] = res.counterexample;
    j.push_back(e);
  }
  return j;
}

inline json relation_report_json(const RelationReport& r) {
  json j = json::array();
  for (const auto& res : r.results) {
    json e;
    e["name"] = res.name;
    e["pass"] = res.pass;
    if (!res.pass) e["counterexample"] = res.counterexample;
    j.push_back(e);
  }
  return j;
}

inline json fixed_structure_json(const FixedStructure& f) {
  json j;
  j["structure"] = structure_type_name(f.type);
  j["points"] = f.n_points;
  j["lines"] = f.n_lines;
  if (f.center >= 0) j["center"] = f.center;
  j["full"] = f.full;
  j["ideal"] = f.ideal;
  j["large"] = f.large;
  j["thick"] = f.thick;
  return j;
}

inline json domesticity_report_json(const DomesticityReport& r) {
  json j;
  j["word"] = r.word;
  j["order"] = r.order;
  j["points_to_opposite"] = r.profile.points_to_opposite;
  j["lines_to_opposite"] = r.profile.lines_to_opposite;
  j["chambers_to_opposite"] = r.profile.chambers_to_opposite;
  j["classification"] = domesticity_name(r.classification);
  j["opposition_diagram"] = diagram_name(r.diagram);
  j["fixes_chamber"] = r.fixes_chamber;
  j["fixed_points"] = r.fixed_points;
  j["fixed_lines"] = r.fixed_lines;
  j["fixed"] = fixed_structure_json(r.fixed);
  return j;
}

inline json collineation_json(const Collineation& c) {
  json j;
  j["word"] = c.word_text;
  j["point_perm"] = c.point_perm;
  j["line_perm"] = c.line_perm;
  return j;
}

inline json suite_report_json(const SuiteReport& r) {
  json j;
  j["hexagon"] = r.hexagon;
  j["clauses"] = json::array();
  for (const auto& c : r.clauses) {
    json e;
    e["id"] = c.id;
    e["status"] = c.status;
    e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["clauses"].push_back(e);
  }
  j["timings"] = json::object();
  for (const auto& [name, sec] : r.timings) j["timings"][name] = sec;
  j["pass"] = r.all_pass();
  return j;
}

inline json findings_json(const ExceptionalFindings& f) {
  json j;
  j["mode"] = f.mode;
  j["found"] = f.found;
  if (f.mode == "exhaustive") {
    j["hits"] = f.n_hits;
    j["conjugacy_classes"] = f.conjugacy_classes;
  } else {
    j["step_index"] = f.step_index;
    j["budget_exhausted"] = f.budget_exhausted;
  }
  if (f.found) j["order"] = f.common_order;
  if (f.witness) j["witness"] = collineation_json(*f.witness);
  return j;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::IOFailure, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(ErrorKind::IOFailure, "write to " + path + " failed");
}

}  // namespace hexforge
