#include "prymlocus/report.hpp"

#include <sstream>

namespace prym {

GraphAnalysis analyze_graph(const EquivariantGraph& g) {
  GraphAnalysis a;
  a.dicing = analyze_dicing(g);
  a.bipartitions = fs_bipartitions(a.dicing.oriented);
  a.fs2 = best_fs_witness(a.bipartitions, 2);
  a.fs4 = best_fs_witness(a.bipartitions, 4);
  return a;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> vertex_ids(const EquivariantGraph& g, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertices()[v].id);
  return out;
}

std::string int_list(const IntRow& row) {
  std::vector<std::string> items;
  for (Int x : row) items.push_back(std::to_string(x));
  return "[" + join(items, ", ") + "]";
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

std::string orbit_label(const EquivariantGraph& g, EdgeIndex rep, EdgeIndex partner) {
  return rep == partner ? g.edges()[rep].id : g.edges()[rep].id + "/" + g.edges()[partner].id;
}

}  // namespace

nlohmann::json validation_json(const EquivariantGraph& g, const ValidationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back({{"code", v.code}, {"message", v.message}});
  nlohmann::json j = {{"ok", report.ok}, {"violations", violations}};
  if (report.ok) {
    std::vector<std::string> bold_edges;
    for (auto e : report.bold_edges) bold_edges.push_back(g.edges()[e].id);
    j["bold_vertices"] = vertex_ids(g, report.bold_vertices);
    j["bold_edges"] = bold_edges;
    j["n_e"] = report.n_e;
    j["c_e"] = report.c_e;
  }
  return j;
}

nlohmann::json classification_json(const DicingAnalysis& a) {
  const auto& g = a.oriented;
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& cls : a.classes) {
    orbits.push_back({{"representative", g.edges()[cls.orbit_rep].id},
                      {"partner", g.edges()[cls.partner].id},
                      {"type", type_number(cls.type)},
                      {"m", cls.multiplier},
                      {"G", cls.gcd},
                      {"basis_values_doubled", cls.basis_values}});
  }
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : a.lattice.basis) basis.push_back(row.coords);
  std::vector<std::string> edge_order;
  for (const auto& e : g.edges()) edge_order.push_back(e.id);
  return {{"d", a.lattice.rank}, {"edge_order", edge_order}, {"basis_doubled", basis}, {"orbits", orbits}};
}

nlohmann::json verdict_json(const FunctionalMatrix& m, const DicingVerdict& v) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.rows) rows.push_back({{"orbit", row.orbit_id}, {"values", row.values}});
  nlohmann::json j = {{"condition", tag_name(m.tag)},
                      {"d", m.d},
                      {"rows", m.rows.size()},
                      {"matrix", rows},
                      {"is_dicing", v.is_dicing}};
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"row_subset", w.row_subset},
                    {"determinant", w.determinant},
                    {"rhs_index", w.rhs_index},
                    {"basis_coordinates", rational_strings(w.basis_coordinates)},
                    {"point_doubled", rational_strings(w.point)},
                    {"membership_defect", w.membership_defect}};
  }
  return j;
}

nlohmann::json fs_witness_json(const EquivariantGraph& g, const FSWitness& w) {
  nlohmann::json orbits = nlohmann::json::array();
  for (auto [a, b] : w.crossing_orbits) orbits.push_back({g.edges()[a].id, g.edges()[b].id});
  return {{"part1", vertex_ids(g, w.part1)},
          {"part2", vertex_ids(g, w.part2)},
          {"crossing_orbits", orbits},
          {"crossing_count", w.crossing_count}};
}

nlohmann::json fs_json(const EquivariantGraph& g, const std::optional<FSWitness>& fs2,
                       const std::optional<FSWitness>& fs4) {
  auto entry = [&](const std::optional<FSWitness>& w) {
    nlohmann::json j = {{"present", w.has_value()}};
    if (w) j["witness"] = fs_witness_json(g, *w);
    return j;
  };
  return {{"min_2", entry(fs2)}, {"min_4", entry(fs4)}};
}

nlohmann::json check_json(const GraphAnalysis& a) {
  const auto& g = a.dicing.oriented;
  return {{"schema_version", kReportSchemaVersion},
          {"validation", validation_json(g, a.dicing.validation)},
          {"classification", classification_json(a.dicing)},
          {"star", verdict_json(a.dicing.star, a.dicing.star_verdict)},
          {"starstar", verdict_json(a.dicing.star_star, a.dicing.star_star_verdict)},
          {"fs", fs_json(g, a.fs2, a.fs4)},
          {"in_indeterminacy_locus", a.in_indeterminacy_locus()}};
}

std::string validation_human(const EquivariantGraph& g, const ValidationReport& report) {
  std::ostringstream out;
  if (!report.ok) {
    out << "validation: FAILED\n";
    for (const auto& v : report.violations) out << "  [" << v.code << "] " << v.message << "\n";
    return out.str();
  }
  std::vector<std::string> bold_edges;
  for (auto e : report.bold_edges) bold_edges.push_back(g.edges()[e].id);
  out << "validation: ok (n_e=" << report.n_e << ", c_e=" << report.c_e << ")\n"
      << "bold vertices: {" << join(vertex_ids(g, report.bold_vertices), ", ") << "}\n"
      << "bold edges: {" << join(bold_edges, ", ") << "}\n";
  return out.str();
}

std::string classification_human(const DicingAnalysis& a) {
  const auto& g = a.oriented;
  std::ostringstream out;
  out << "d = " << a.lattice.rank << "\n";
  out << "edge classes (basis values in doubled units, x1/2):\n";
  for (const auto& cls : a.classes) {
    out << "  " << orbit_label(g, cls.orbit_rep, cls.partner) << ": type " << type_number(cls.type);
    if (cls.multiplier) out << ", m=" << cls.multiplier;
    out << ", G=" << cls.gcd << ", values " << int_list(cls.basis_values) << "\n";
  }
  return out.str();
}

std::string verdict_human(const FunctionalMatrix& m, const DicingVerdict& v) {
  std::ostringstream out;
  out << "condition " << tag_name(m.tag) << ": " << (v.is_dicing ? "holds" : "fails") << " (" << m.rows.size() << "x"
      << m.d << " matrix)\n";
  for (const auto& row : m.rows) out << "  " << row.orbit_id << ": " << int_list(row.values) << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    out << "  witness: rows {" << join(w.row_subset, ", ") << "}, det " << w.determinant << ", unit rhs at "
        << w.rhs_index << "\n"
        << "  witness point (doubled units, x1/2): [" << join(rational_strings(w.point), ", ") << "]\n"
        << "  " << w.membership_defect << "\n";
  }
  return out.str();
}

std::string fs_human(const EquivariantGraph& g, const std::optional<FSWitness>& fs2,
                     const std::optional<FSWitness>& fs4) {
  std::ostringstream out;
  auto line = [&](int threshold, const std::optional<FSWitness>& w) {
    out << "FS degeneration (>=" << threshold << " edges): " << (w ? "yes" : "no");
    if (w) {
      std::vector<std::string> orbits;
      for (auto [a, b] : w->crossing_orbits) orbits.push_back(orbit_label(g, a, b));
      out << ", parts {" << join(vertex_ids(g, w->part1), ", ") << "} | {" << join(vertex_ids(g, w->part2), ", ")
          << "}, " << w->crossing_count << " crossing edges {" << join(orbits, ", ") << "}";
    }
    out << "\n";
  };
  line(2, fs2);
  line(4, fs4);
  return out.str();
}

std::string check_human(const GraphAnalysis& a) {
  const auto& g = a.dicing.oriented;
  return validation_human(g, a.dicing.validation) + classification_human(a.dicing) +
         verdict_human(a.dicing.star, a.dicing.star_verdict) +
         verdict_human(a.dicing.star_star, a.dicing.star_star_verdict) + fs_human(g, a.fs2, a.fs4) +
         "indeterminacy: " + (a.in_indeterminacy_locus() ? "YES" : "NO") + "\n";
}

}  // namespace prym
