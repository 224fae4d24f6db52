// prymlocus: analyze dual graphs of stable curves with involution and run the
// exhaustive consistency suite.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "prymlocus/error.hpp"
#include "prymlocus/fs_detect.hpp"
#include "prymlocus/report.hpp"
#include "prymlocus/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInputInvalid = 2, kCapsExceeded = 3, kCounterexample = 4 };

struct Options {
  std::string input;
  std::string output = "prymlocus_report.ndjson";
  std::string format = "human";
  int min_fs_edges = 4;
  prym::GenSpec gen;
  bool mutant = false;
  int g_param = 0;
  int n = 0;
};

bool structured(const Options& o) { return o.format == "structured"; }

int emit(const nlohmann::json& j, const std::string& human, const Options& o) {
  if (structured(o)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
  }
  return kOk;
}

// Loads and validates; invalid graphs exit 2 with the violation listing.
prym::EquivariantGraph load_valid(const Options& o) {
  auto g = prym::load_graph(o.input);
  prym::require_valid(g);
  return g;
}

int cmd_check(const Options& o) {
  auto a = prym::analyze_graph(load_valid(o));
  return emit(prym::check_json(a), prym::check_human(a), o);
}

int cmd_classify(const Options& o) {
  auto a = prym::analyze_dicing(load_valid(o));
  nlohmann::json j = prym::classification_json(a);
  j["schema_version"] = prym::kReportSchemaVersion;
  return emit(j, prym::classification_human(a), o);
}

int cmd_fs(const Options& o) {
  auto g = prym::auto_orient(load_valid(o));
  auto all = prym::fs_bipartitions(g);
  auto best = prym::best_fs_witness(all, o.min_fs_edges);
  nlohmann::json j = prym::fs_json(g, prym::best_fs_witness(all, 2), prym::best_fs_witness(all, 4));
  j["schema_version"] = prym::kReportSchemaVersion;
  j["threshold"] = o.min_fs_edges;
  j["verdict"] = best.has_value();
  if (best) j["best"] = prym::fs_witness_json(g, *best);
  std::string human = prym::fs_human(g, prym::best_fs_witness(all, 2), prym::best_fs_witness(all, 4));
  human += "verdict at >=" + std::to_string(o.min_fs_edges) + ": " + (best ? "yes" : "no") + "\n";
  return emit(j, human, o);
}

int cmd_verify(const Options& o) {
  prym::CheckOptions check;
  check.mutant_starstar = o.mutant;
  auto paths = prym::SuitePaths::from_prefix(o.output);
  auto suite = prym::run_suite(o.gen, paths, check);
  nlohmann::json j = suite.to_json(o.gen);
  std::string human = "graphs checked: " + std::to_string(suite.graphs) + "\n";
  for (const auto& [name, t] : suite.tallies) {
    human += "  " + name + ": " + std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail, " +
             std::to_string(t.skip) + " skip\n";
  }
  human += "failed graphs: " + std::to_string(suite.failed_graphs) + " (loop-involving: " +
           std::to_string(suite.loop_failures) + ")\n";
  human += "report: " + paths.report + "\nsummary: " + paths.summary + "\ncounterexamples: " + paths.counterexamples +
           "\n";
  emit(j, human, o);
  return suite.success() ? kOk : kCounterexample;
}

int cmd_components(const Options& o) {
  auto pairs = prym::fs_component_genera(o.g_param, o.n);
  nlohmann::json list = nlohmann::json::array();
  std::string human;
  for (auto [a, b] : pairs) {
    list.push_back({a, b});
    human += "(" + std::to_string(a) + ", " + std::to_string(b) + ")\n";
  }
  human += "components: " + std::to_string(pairs.size()) + "\n";
  nlohmann::json j = {{"schema_version", prym::kReportSchemaVersion}, {"g", o.g_param}, {"n", o.n},
                      {"genera", list}, {"count", pairs.size()}};
  return emit(j, human, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indeterminacy of the extended Prym map from dual graphs with involution"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input,input", o.input, "Graph document (JSON)")->required();
    add_format(cmd);
  };

  auto* check = app.add_subcommand("check", "Full analysis: classes, (*), (**), FS degenerations, verdict");
  add_input(check);
  auto* classify = app.add_subcommand("classify", "Edge-orbit classification over the anti-invariant lattice");
  add_input(classify);
  auto* fs = app.add_subcommand("fs", "Friedman-Smith degeneration search");
  add_input(fs);
  fs->add_option("--min-fs-edges", o.min_fs_edges, "Minimum crossing edges")->check(CLI::IsMember({2, 4}));

  auto* verify = app.add_subcommand("verify", "Exhaustive cross-verification over small graphs");
  add_format(verify);
  verify->add_option("-o,--output", o.output, "Report path; summary and counterexamples are written alongside");
  verify->add_option("--max-fixed-vertices", o.gen.max_fixed_vertices)->capture_default_str();
  verify->add_option("--max-vertex-pairs", o.gen.max_vertex_pairs)->capture_default_str();
  verify->add_option("--max-fixed-edges", o.gen.max_fixed_edges)->capture_default_str();
  verify->add_option("--max-edge-pairs", o.gen.max_edge_pairs)->capture_default_str();
  verify->add_option("--max-edge-orbits", o.gen.max_edge_orbits)->capture_default_str();
  verify->add_flag("--allow-loops,!--no-loops", o.gen.allow_loops, "Generate loops (default on)");
  verify->add_flag("--dedup", o.gen.dedup, "One graph per isomorphism class");
  verify->add_flag("--mutant", o.mutant, "Test-only: mis-scale the (**) matrix")->group("");

  auto* components = app.add_subcommand("components", "Genus splittings of FS locus components");
  add_format(components);
  components->add_option("g", o.g_param, "Genus parameter g")->required();
  components->add_option("n", o.n, "Half the number of FS edges")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputInvalid;
  }

  try {
    if (*check) return cmd_check(o);
    if (*classify) return cmd_classify(o);
    if (*fs) return cmd_fs(o);
    if (*verify) return cmd_verify(o);
    if (*components) return cmd_components(o);
  } catch (const prym::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputInvalid;
  } catch (const prym::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapsExceeded;
  }
  return kInputInvalid;
}
