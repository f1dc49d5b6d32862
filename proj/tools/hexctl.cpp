// hexctl: build and query coordinatised hexagons, evaluate generator
// words, classify collineations, run the verification suites, and export
// incidence graphs.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <hexforge/exportio.hpp>

using namespace hexforge;

namespace {

const char* kGrammar =
    "word    := letter (\";\" letter)*\n"
    "letter  := \"x\" i \"(\" lit \")\" | \"s1\" | \"s6\" | \"h:id\" | \"h:sigma\" | \"h:sigma2\"\n"
    "           (i in {1..7, 12}; coefficient in J for odd i, in F for even i)\n"
    "lit     := \"0\" | \"1\" | integer | \"g\" | \"g^k\" | \"[c0,c1,...]\"  (little-endian basis)\n"
    "element := \"(inf)\" | \"(c1,...,cn)\" | \"[inf]\" | \"[c1,...,cn]\"  (1 <= n <= 5)\n";

bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::CoefficientDomainMismatch:
    case ErrorKind::UnsupportedKind:
    case ErrorKind::UnsupportedSize:
    case ErrorKind::NonPrimeCharacteristic:
    case ErrorKind::ReducibleModulus:
    case ErrorKind::BadExtensionDegree:
    case ErrorKind::SortMismatch:
    case ErrorKind::NotOpposite:
    case ErrorKind::ZeroInverse:
    case ErrorKind::MixedFields:
    case ErrorKind::InvalidSubfield:
      return true;
    default:
      return false;
  }
}

struct RunConfig {
  std::string config_path;
  std::string word;
  std::string element;
  std::string mode = "exhaustive";
  std::string format;
  std::string output;
  uint64_t seed = 1;
  long budget = 1'000'000;
  long cap = 50'000;
  int threads = 0;
  bool no_timestamp = false;
  bool no_cache = false;
  bool unfiltered = false;
};

HexSystem load_system(const RunConfig& rc) {
  if (rc.config_path.empty())
    fail(ErrorKind::SyntaxError, "--config <descriptor.json> is required for this command");
  std::ifstream in(rc.config_path);
  if (!in) fail(ErrorKind::IOFailure, "cannot read config " + rc.config_path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::SyntaxError, "config is not valid JSON: " + std::string(e.what()));
  }
  return system_from_descriptor(j);
}

std::string cache_path(const RunConfig& rc, const HexSystem& sys) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(descriptor_hash(sys)));
  return rc.config_path + ".cache-" + buf + ".json";
}

// Build, reusing a cached incidence structure next to the config when the
// descriptor hash matches.
Hexagon build_hexagon(const RunConfig& rc, const HexSystem& sys, bool* cache_used = nullptr) {
  if (cache_used) *cache_used = false;
  std::string cpath;
  if (!rc.config_path.empty() && !rc.no_cache) {
    cpath = cache_path(rc, sys);
    std::ifstream in(cpath);
    if (in) {
      try {
        json j;
        in >> j;
        if (j.at("descriptor_hash").get<uint64_t>() == descriptor_hash(sys)) {
          std::vector<std::vector<int32_t>> lp = j.at("line_points");
          Hexagon hx(sys, &lp);
          if (cache_used) *cache_used = true;
          return hx;
        }
      } catch (const std::exception&) {
        // unreadable cache: rebuild
      }
    }
  }
  Hexagon hx(sys);
  if (!cpath.empty()) {
    json j;
    j["descriptor_hash"] = descriptor_hash(sys);
    json lp = json::array();
    for (int l = 0; l < hx.n_lines(); ++l) lp.push_back(hx.points_of_line(l));
    j["line_points"] = std::move(lp);
    try {
      write_file(cpath, j.dump());
    } catch (const HexError&) {
      // cache writes are best-effort
    }
  }
  return hx;
}

void emit(const RunConfig& rc, const std::string& content) {
  if (rc.output.empty())
    std::cout << content << "\n";
  else
    write_file(rc.output, content.back() == '\n' ? content : content + "\n");
}

void emit_json(const RunConfig& rc, const json& j) { emit(rc, j.dump(2)); }

int cmd_build(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  bool cached = false;
  Hexagon hx = build_hexagon(rc, sys, &cached);
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["points"] = hx.n_points();
  j["lines"] = hx.n_lines();
  j["chambers"] = hx.n_chambers();
  j["cache_used"] = cached;
  emit_json(rc, j);
  return 0;
}

int cmd_verify_axioms(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Hexagon hx = build_hexagon(rc, sys);
  auto rep = hx.verify_axioms();
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["axioms"] = axiom_report_json(rep);
  emit_json(rc, j);
  return rep.pass ? 0 : 1;
}

int cmd_identities(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  auto rep = identity_suite(sys, rc.seed);
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["identities"] = identity_report_json(rep);
  j["pass"] = rep.all_pass();
  emit_json(rc, j);
  if (!rep.all_pass()) {
    for (const auto& r : rep.results)
      if (!r.pass) std::cerr << "counterexample: " << r.name << " at " << r.counterexample << "\n";
    return 1;
  }
  return 0;
}

int cmd_relations(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Hexagon hx = build_hexagon(rc, sys);
  auto rep = validate_relations(hx);
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["relations"] = relation_report_json(rep);
  j["pass"] = rep.all_pass();
  emit_json(rc, j);
  if (!rep.all_pass()) {
    for (const auto& r : rep.results)
      if (!r.pass) std::cerr << "counterexample: " << r.name << " at " << r.counterexample << "\n";
    return 1;
  }
  return 0;
}

int cmd_act(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Word w = parse_word(sys, rc.word);
  HexElement e = parse_element(sys, rc.element);
  HexElement img = apply_word(sys, w, e);
  std::string lit = format_element(sys, img);
  if (rc.format == "json") {
    json j;
    j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
    j["word"] = rc.word;
    j["element"] = rc.element;
    j["image"] = lit;
    emit_json(rc, j);
  } else {
    emit(rc, lit);
  }
  return 0;
}

int cmd_classify(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Hexagon hx = build_hexagon(rc, sys);
  auto c = realize(hx, rc.word);
  auto rep = classify_collineation(hx, c);
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["report"] = domesticity_report_json(rep);
  emit_json(rc, j);
  return 0;
}

int cmd_theorem1(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Hexagon hx = build_hexagon(rc, sys);
  auto rep = theorem1_suite(hx, rc.seed);
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["suite"] = suite_report_json(rep);
  emit_json(rc, j);
  if (!rep.all_pass()) {
    for (const auto& c : rep.clauses)
      if (c.status == "fail") std::cerr << "clause failed: " << c.id << " (" << c.detail << ")\n";
    return 1;
  }
  return 0;
}

int cmd_search(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Hexagon hx = build_hexagon(rc, sys);
  SearchMode mode;
  if (rc.mode == "exhaustive")
    mode = SearchMode::Exhaustive;
  else if (rc.mode == "random")
    mode = SearchMode::Random;
  else
    fail(ErrorKind::SyntaxError, "--mode must be exhaustive or random");
  auto f = search_exceptional(hx, mode, rc.budget, rc.seed, rc.unfiltered,
                              static_cast<std::size_t>(rc.cap));
  json j;
  j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
  j["findings"] = findings_json(f);
  emit_json(rc, j);
  return 0;
}

int cmd_export(const RunConfig& rc) {
  HexSystem sys = load_system(rc);
  Hexagon hx = build_hexagon(rc, sys);
  if (rc.format == "dot") {
    emit(rc, export_graph_dot(hx));
  } else if (rc.format == "json" || rc.format.empty()) {
    json j;
    j["header"] = run_header(sys, rc.seed, rc.budget, !rc.no_timestamp);
    j["graph"] = export_graph_json(hx);
    emit_json(rc, j);
  } else {
    fail(ErrorKind::SyntaxError, "--format must be dot or json");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexctl: exact computations in finite Moufang hexagons"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;

  app.add_option("--config", rc.config_path, "system descriptor JSON")->expected(1);
  app.add_option("--seed", rc.seed, "seed echoed into outputs and used by sampled checks");
  app.add_option("--budget", rc.budget, "step budget for randomized searches");
  app.add_option("--cap", rc.cap, "element cap for exhaustive closures");
  app.add_option("--output", rc.output, "write the artifact to this path instead of stdout");
  app.add_option("--format", rc.format, "output format (json, dot, text)");
  app.add_option("--threads", rc.threads, "worker cap (default: HEXFORGE_THREADS or hardware)");
  app.add_flag("--no-timestamp", rc.no_timestamp, "omit the timestamp header field");
  app.add_flag("--no-cache", rc.no_cache, "do not read or write build caches next to the config");
  app.add_flag("--unfiltered", rc.unfiltered, "disable the order-4 prefilter in random searches");

  auto* c_build = app.add_subcommand("build", "build the hexagon and report counts");
  auto* c_axioms = app.add_subcommand("verify-axioms", "girth, diameter and degree checks");
  auto* c_ident = app.add_subcommand("identities", "run the hexagonal-system identity suite");
  auto* c_rel = app.add_subcommand("relations", "validate generator relations as permutations");
  auto* c_act = app.add_subcommand("act", "apply a word to an element");
  c_act->add_option("--word", rc.word, "generator word")->required();
  c_act->add_option("--element", rc.element, "element literal")->required();
  auto* c_classify = app.add_subcommand("classify", "domesticity report for a word");
  c_classify->add_option("--word", rc.word, "generator word")->required();
  auto* c_thm = app.add_subcommand("theorem1", "run the classification verification suite");
  auto* c_search = app.add_subcommand("search-exceptional", "search for exceptional domestic collineations");
  c_search->add_option("--mode", rc.mode, "exhaustive or random");
  auto* c_export = app.add_subcommand("export", "export the incidence graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return 0;  // --help
    std::cerr << kGrammar;
    return 2;
  }

  if (rc.threads > 0) {
    worker_cap() = rc.threads;
  } else if (const char* env = std::getenv("HEXFORGE_THREADS")) {
    worker_cap() = std::atoi(env);
  }

  try {
    if (c_build->parsed()) return cmd_build(rc);
    if (c_axioms->parsed()) return cmd_verify_axioms(rc);
    if (c_ident->parsed()) return cmd_identities(rc);
    if (c_rel->parsed()) return cmd_relations(rc);
    if (c_act->parsed()) return cmd_act(rc);
    if (c_classify->parsed()) return cmd_classify(rc);
    if (c_thm->parsed()) return cmd_theorem1(rc);
    if (c_search->parsed()) return cmd_search(rc);
    if (c_export->parsed()) return cmd_export(rc);
  } catch (const HexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_usage_error(e.kind())) {
      std::cerr << kGrammar;
      return 2;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
