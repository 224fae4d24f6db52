#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "prymlocus/dicing.hpp"
#include "prymlocus/graph.hpp"

namespace prym {

/// Bounds for exhaustive generation. Vertices are f fixed vertices plus p
/// exchanged pairs; edge orbits are fixed edges or exchanged pairs.
struct GenSpec {
  int max_fixed_vertices = 2;
  int max_vertex_pairs = 1;
  int max_fixed_edges = 4;
  int max_edge_pairs = 4;
  int max_edge_orbits = 4;  // bound on fixed edges + edge pairs together
  bool allow_loops = true;
  bool dedup = false;

  void check() const;
  nlohmann::json to_json() const;
};

/// Streams every connected equivariant multigraph within the bounds, in a
/// deterministic order. With dedup, one graph per equivariant isomorphism class.
void for_each_graph(const GenSpec& spec, const std::function<void(const EquivariantGraph&)>& visit);
std::vector<EquivariantGraph> enumerate_graphs(const GenSpec& spec);

/// Canonical key under vertex relabelings that commute with the involution.
std::string canonical_key(const EquivariantGraph& g);

/// Renames vertex and edge ids by a seeded random permutation. The result is
/// isomorphic to g, usually with a different id order and orientation choice.
EquivariantGraph relabel(const EquivariantGraph& g, std::uint64_t seed);

/// Independent re-check of a failed dicing verdict: recomputes the minor by
/// cofactor expansion, substitutes the point into the selected hyperplanes,
/// and tests membership by back-substitution along the HNF pivots. Returns an
/// empty string when the witness is sound.
std::string verify_witness(const FunctionalMatrix& m, const DicingWitness& w);

struct CheckOptions {
  std::size_t oracle_max_d = 4;
  std::size_t cycle_cap = 1'000'000;
  // Test-only: STARSTAR rows left unscaled by the gcd, which must trip theorem2 checks.
  bool mutant_starstar = false;
};

struct ConsistencyRecord {
  std::string graph_encoding;
  nlohmann::json graph;
  bool has_loops = false;
  int d = 0;
  int n_e = 0;
  int c_e = 0;
  bool star = false;
  bool starstar = false;
  bool fs2 = false;
  bool fs4 = false;
  bool has_type2 = false;
  std::map<std::string, std::string> checks;  // name -> "pass" | "fail" | "skip"
  std::vector<std::string> notes;

  std::vector<std::string> failed_checks() const;
  nlohmann::json to_json() const;
};

/// Runs every pipeline stage and cross-check on one graph. Failing checks are
/// recorded, not thrown; only cap overruns and invalid input escape.
ConsistencyRecord check_graph(const EquivariantGraph& g, const CheckOptions& options = {});

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct SuiteReport {
  std::size_t graphs = 0;
  std::size_t failed_graphs = 0;
  std::size_t loop_failures = 0;
  std::map<std::string, CheckTally> tallies;

  bool success() const { return failed_graphs == 0; }
  nlohmann::json to_json(const GenSpec& spec) const;
};

struct SuitePaths {
  std::string report;           // newline-delimited records
  std::string summary;          // one JSON document
  std::string counterexamples;  // graph documents plus failing check names
  static SuitePaths from_prefix(const std::string& report_path);
};

/// Enumerates, checks, and persists. Throws InputError on I/O failure.
SuiteReport run_suite(const GenSpec& spec, const SuitePaths& paths, const CheckOptions& options = {});

}  // namespace prym
