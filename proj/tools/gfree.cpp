// Command-line front end: parsing, partitioning, chromatic computation, and
// corpus verification with JSON output.
//
// Exit codes: 0 success/pass, 2 usage error, 3 verification failure,
// 4 theorem violation (a counterexample; must never occur).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfree/canonical.hpp"
#include "gfree/extremal.hpp"
#include "gfree/graph.hpp"
#include "gfree/graph6.hpp"
#include "gfree/partition.hpp"
#include "gfree/pattern.hpp"
#include "gfree/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gfree;

namespace {

Graph load_graph(const std::string& input) {
  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (std::filesystem::exists(input)) {
    std::ifstream f(input);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  } else if (auto named = parse_named(input)) {
    return *named;
  } else {
    throw std::runtime_error("cannot read '" + input + "': not a file or a known graph name");
  }
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at == std::string::npos) throw std::runtime_error("empty graph input");
  if (std::isdigit(static_cast<unsigned char>(text[at]))) return parse_edge_list(text);
  return parse_graph6(text);
}

std::vector<Pattern> parse_specs(const std::string& text) {
  std::vector<Pattern> specs;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) specs.push_back(parse_pattern(tok, '+'));
  if (specs.empty()) throw std::invalid_argument("no patterns in spec list");
  return specs;
}

json set_json(VertexSet s) {
  json arr = json::array();
  for (int v : vertices_of(s)) arr.push_back(v);
  return arr;
}

json classes_json(const std::vector<VertexSet>& classes) {
  json arr = json::array();
  for (VertexSet c : classes) arr.push_back(set_json(c));
  return arr;
}

json extremal_json(const Graph& g, const Pattern& p, const ExtremalSet& e) {
  return json{{"graph_g6", write_graph6(g)},
              {"pattern", p.name},
              {"set", set_json(e.set)},
              {"size", e.size},
              {"regular_component_count", e.regular_component_count},
              {"hs_component_count", e.hs_component_count}};
}

json audit_json(const Graph& g, const Pattern& p, const ExtremalSet& e, const AuditReport& rep) {
  json comps = json::array();
  for (VertexSet c : rep.regular_components) comps.push_back(set_json(c));
  json part_a = json::array();
  for (const auto& a : rep.part_a)
    part_a.push_back({{"vertex", a.vertex}, {"neighbors_in_s", a.neighbors_in_s}, {"ok", a.ok}});
  json part_b = json::array();
  for (const auto& b : rep.part_b)
    part_b.push_back({{"vertex", b.vertex},
                      {"unique_vertex_set", b.unique_vertex_set},
                      {"unique_copy", b.unique_copy},
                      {"d_regular_component", b.d_regular_component},
                      {"ok", b.ok}});
  return json{{"graph_g6", write_graph6(g)},
              {"pattern", p.name},
              {"s", set_json(e.set)},
              {"regular_components", comps},
              {"part_a", part_a},
              {"part_b", part_b},
              {"part_c_case", rep.part_c_case},
              {"passed", rep.passed}};
}

json certificate_json(const Graph& g, const std::vector<Pattern>& specs,
                      const PartitionCertificate& cert) {
  json spec_names = json::array();
  for (const Pattern& p : specs) spec_names.push_back(p.name);
  json free_flags = json::array();
  for (size_t i = 0; i < specs.size(); ++i)
    free_flags.push_back(is_free(g, cert.classes[i], specs[i]));
  return json{{"graph_g6", write_graph6(g)},
              {"specs", spec_names},
              {"classes", classes_json(cert.classes)},
              {"designated_max_class", cert.designated_max_class},
              {"method_tag", cert.method_tag},
              {"audit",
               {{"class_free", free_flags},
                {"max_class_size",
                 set_size(cert.classes[static_cast<size_t>(cert.designated_max_class)])},
                {"oracle_max_size",
                 max_free_size(g, specs[static_cast<size_t>(cert.designated_max_class)])}}}};
}

json report_json(const VerifyReport& rep) {
  json fails = json::array();
  for (const Failure& f : rep.failures)
    fails.push_back({{"graph6", f.graph6}, {"spec", f.spec}, {"stage", f.stage},
                     {"witness", f.witness}});
  json notes = json::object();
  for (const auto& [k, v] : rep.notes) notes[k] = v;
  return json{{"suite", rep.suite},
              {"n_max", rep.n_max},
              {"instances", rep.instances},
              {"exceptions", rep.exceptions},
              {"notes", notes},
              {"failures", fails}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-free graph partitioning toolkit"};
  app.require_subcommand(1);

  std::string input = "-", pattern_text, specs_text, degrees_text, out_dir, suite = "all";
  int nmax = 7, jobs = 0, kflag = 0;
  bool json_out = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "file path, '-', or a named graph (petersen, K7, C9, K3,3,3)");
  };

  auto* maxset = app.add_subcommand("maxset", "maximum pattern-free set with extremal tie-breaking");
  add_input(maxset);
  maxset->add_option("--pattern,-p", pattern_text, "pattern syntax: K3, C5, P4, mindeg>=2, g6:<s>")
      ->required();

  auto* partition = app.add_subcommand("partition", "partition theorem certificate");
  add_input(partition);
  partition->add_option("--specs", specs_text, "comma list of patterns; '+' joins a family list")
      ->required();

  auto* chi = app.add_subcommand("chi", "exact pattern-free chromatic number");
  add_input(chi);
  chi->add_option("--pattern,-p", pattern_text)->required();

  auto* lovasz = app.add_subcommand("lovasz", "bounded-degree decomposition by local search");
  add_input(lovasz);
  lovasz->add_option("--degrees", degrees_text, "comma list of degree bounds d_i")->required();

  auto* audit = app.add_subcommand("audit", "extremal-lemma audit of the extremal set");
  add_input(audit);
  audit->add_option("--pattern,-p", pattern_text)->required();

  auto* verify = app.add_subcommand("verify", "exhaustive corpus suites");
  verify->add_option("--nmax", nmax, "largest corpus order (default 7)")
      ->check(CLI::Range(1, 8));
  verify->add_option("--suite", suite,
                     "all|theorem1|lemma1|bounds|lovasz|catlin|degenerate");
  verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  verify->add_option("--out", out_dir, "directory for per-suite JSON reports");

  auto* gen = app.add_subcommand("gen", "connected graphs on n vertices, one graph6 line each");
  gen->add_option("--nmax", nmax, "vertex count")->required()->check(CLI::Range(1, 8));

  for (auto* cmd : {maxset, partition, chi, lovasz, audit})
    cmd->add_flag("--json", json_out, "JSON output (default for structured results)");
  (void)kflag;

  CLI11_PARSE(app, argc, argv);

  try {
    if (maxset->parsed()) {
      Graph g = load_graph(input);
      Pattern p = parse_pattern(pattern_text);
      ExtremalSet e = extremal_set(g, p);
      std::cout << extremal_json(g, p, e).dump(2) << "\n";
    } else if (partition->parsed()) {
      Graph g = load_graph(input);
      std::vector<Pattern> specs = parse_specs(specs_text);
      auto res = theorem1_partition(g, specs);
      if (auto* ex = std::get_if<ExceptionKind>(&res)) {
        std::cout << json{{"graph_g6", write_graph6(g)},
                          {"exception", exception_name(*ex)}}.dump(2)
                  << "\n";
      } else {
        std::cout << certificate_json(g, specs, std::get<PartitionCertificate>(res)).dump(2)
                  << "\n";
      }
    } else if (chi->parsed()) {
      Graph g = load_graph(input);
      Pattern p = parse_pattern(pattern_text);
      int k = chi_free(g, p);
      std::vector<Pattern> patterns(static_cast<size_t>(k), p);
      auto witness = exact_free_partition(g, patterns);
      std::cout << json{{"graph_g6", write_graph6(g)},
                        {"pattern", p.name},
                        {"chi", k},
                        {"witness", witness ? classes_json(*witness) : json::array()}}.dump(2)
                << "\n";
    } else if (lovasz->parsed()) {
      Graph g = load_graph(input);
      std::vector<int> degrees;
      std::istringstream in(degrees_text);
      std::string tok;
      while (std::getline(in, tok, ',')) degrees.push_back(std::stoi(tok));
      LovaszResult res = lovasz_partition(g, degrees);
      std::cout << json{{"graph_g6", write_graph6(g)},
                        {"degrees", degrees},
                        {"classes", classes_json(res.classes)},
                        {"moves", res.moves}}.dump(2)
                << "\n";
    } else if (audit->parsed()) {
      Graph g = load_graph(input);
      Pattern p = parse_pattern(pattern_text);
      ExtremalSet e = extremal_set(g, p);
      AuditReport rep = lemma1_audit(g, p, e);
      std::cout << audit_json(g, p, e, rep).dump(2) << "\n";
    } else if (gen->parsed()) {
      for (const Graph& g : enumerate_connected_graphs(nmax))
        std::cout << write_graph6(g) << "\n";
    } else if (verify->parsed()) {
      std::vector<Pattern> catalog = default_catalog();
      std::vector<VerifyReport> reports;
      auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
      if (want("theorem1")) reports.push_back(verify_theorem1(nmax, catalog, jobs));
      if (want("lemma1")) reports.push_back(verify_lemma1(nmax, catalog, jobs));
      if (want("bounds")) reports.push_back(verify_bounds(nmax, catalog, jobs));
      if (want("lovasz")) reports.push_back(verify_lovasz(nmax, jobs));
      if (want("catlin")) reports.push_back(verify_catlin_brooks(nmax, jobs));
      if (want("degenerate")) reports.push_back(verify_degenerate(nmax, jobs));
      if (reports.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");

      bool failed = false;
      for (const VerifyReport& rep : reports) {
        failed |= !rep.failures.empty();
        std::cout << rep.suite << ": instances=" << rep.instances
                  << " exceptions=" << rep.exceptions
                  << " failures=" << rep.failures.size()
                  << " wall_ms=" << static_cast<long>(rep.wall_ms) << "\n";
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          std::ofstream f(out_dir + "/" + rep.suite + ".json");
          f << report_json(rep).dump(2) << "\n";
        }
      }
      return failed ? 3 : 0;
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
