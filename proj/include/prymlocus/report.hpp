#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prymlocus/dicing.hpp"
#include "prymlocus/fs_detect.hpp"

namespace prym {

inline constexpr int kReportSchemaVersion = 1;

// Full single-graph analysis behind the check command.
struct GraphAnalysis {
  DicingAnalysis dicing;
  std::vector<FSWitness> bipartitions;
  std::optional<FSWitness> fs2;
  std::optional<FSWitness> fs4;

  // Headline: the curve is in the indeterminacy locus iff (*) fails.
  bool in_indeterminacy_locus() const { return !dicing.star_verdict.is_dicing; }
};

GraphAnalysis analyze_graph(const EquivariantGraph& g);

nlohmann::json validation_json(const EquivariantGraph& g, const ValidationReport& report);
nlohmann::json classification_json(const DicingAnalysis& a);
nlohmann::json verdict_json(const FunctionalMatrix& m, const DicingVerdict& v);
nlohmann::json fs_witness_json(const EquivariantGraph& g, const FSWitness& w);
nlohmann::json fs_json(const EquivariantGraph& g, const std::optional<FSWitness>& fs2,
                       const std::optional<FSWitness>& fs4);
nlohmann::json check_json(const GraphAnalysis& a);

std::string validation_human(const EquivariantGraph& g, const ValidationReport& report);
std::string classification_human(const DicingAnalysis& a);
std::string verdict_human(const FunctionalMatrix& m, const DicingVerdict& v);
std::string fs_human(const EquivariantGraph& g, const std::optional<FSWitness>& fs2,
                     const std::optional<FSWitness>& fs4);
std::string check_human(const GraphAnalysis& a);

}  // namespace prym
