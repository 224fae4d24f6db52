#include "prymlocus/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "prymlocus/error.hpp"
#include "prymlocus/fs_detect.hpp"
#include "prymlocus/homology.hpp"

namespace prym {

void GenSpec::check() const {
  if (max_fixed_vertices < 0 || max_vertex_pairs < 0 || max_fixed_edges < 0 || max_edge_pairs < 0 ||
      max_edge_orbits < 0) {
    throw InputError("enumeration bounds must be nonnegative");
  }
  if (max_fixed_vertices > 6 || max_vertex_pairs > 4 || max_edge_orbits > 12) {
    throw CapExceeded("enumeration bounds exceed the supported desk-scale caps "
                      "(fixed vertices <= 6, vertex pairs <= 4, edge orbits <= 12)");
  }
}

nlohmann::json GenSpec::to_json() const {
  return {{"max_fixed_vertices", max_fixed_vertices}, {"max_vertex_pairs", max_vertex_pairs},
          {"max_fixed_edges", max_fixed_edges},       {"max_edge_pairs", max_edge_pairs},
          {"max_edge_orbits", max_edge_orbits},       {"allow_loops", allow_loops},
          {"dedup", dedup}};
}

namespace {

std::string numbered(char prefix, std::size_t k) {
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "%c%02zu", prefix, k);
  return buffer;
}

// Vertex layout for enumeration: fixed vertices first, then pairs (a, b).
struct Layout {
  int fixed = 0;
  int pairs = 0;
  std::vector<VertexIndex> image;

  Layout(int f, int p) : fixed(f), pairs(p), image(static_cast<std::size_t>(f + 2 * p)) {
    for (int v = 0; v < f; ++v) image[v] = v;
    for (int k = 0; k < p; ++k) {
      image[f + 2 * k] = f + 2 * k + 1;
      image[f + 2 * k + 1] = f + 2 * k;
    }
  }
  std::size_t size() const { return image.size(); }
};

using Ends = std::pair<VertexIndex, VertexIndex>;

Ends sorted_ends(VertexIndex a, VertexIndex b) { return a <= b ? Ends{a, b} : Ends{b, a}; }

Ends pair_class(const std::vector<VertexIndex>& image, Ends e) {
  return std::min(sorted_ends(e.first, e.second), sorted_ends(image[e.first], image[e.second]));
}

struct SlotTypes {
  std::vector<Ends> fixed;  // fixed-edge endpoints
  std::vector<Ends> pairs;  // class representatives for exchanged edge pairs
};

SlotTypes slot_types(const Layout& layout, bool allow_loops) {
  SlotTypes slots;
  std::set<Ends> seen;
  for (VertexIndex a = 0; a < layout.size(); ++a) {
    for (VertexIndex b = a; b < layout.size(); ++b) {
      if (a == b && !allow_loops) continue;
      const bool both_fixed = layout.image[a] == a && layout.image[b] == b;
      if (both_fixed) slots.fixed.push_back({a, b});
      Ends cls = pair_class(layout.image, {a, b});
      if (seen.insert(cls).second) slots.pairs.push_back(cls);
    }
  }
  return slots;
}

// Lexicographic multisets: counts per type with a total bound.
void for_each_multiset(std::size_t types, int max_total,
                       const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> counts(types, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t t, int left) {
    if (t == types) {
      visit(counts);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[t] = c;
      rec(t + 1, left - c);
    }
    counts[t] = 0;
  };
  rec(0, max_total);
}

EquivariantGraph build_graph(const Layout& layout, const SlotTypes& slots, const std::vector<int>& fixed_counts,
                             const std::vector<int>& pair_counts) {
  GraphDocument doc;
  for (std::size_t v = 0; v < layout.size(); ++v) {
    doc.vertices.push_back({numbered('v', v), std::nullopt});
    doc.vertex_map.emplace_back(numbered('v', v), numbered('v', layout.image[v]));
  }
  std::size_t next = 0;
  auto add_edge = [&](Ends ends) {
    std::string id = numbered('e', next++);
    doc.edges.push_back({id, numbered('v', ends.first), numbered('v', ends.second)});
    return id;
  };
  for (std::size_t t = 0; t < slots.fixed.size(); ++t) {
    for (int c = 0; c < fixed_counts[t]; ++c) {
      auto id = add_edge(slots.fixed[t]);
      doc.edge_map.emplace_back(id, id);
    }
  }
  for (std::size_t t = 0; t < slots.pairs.size(); ++t) {
    for (int c = 0; c < pair_counts[t]; ++c) {
      Ends ends = slots.pairs[t];
      auto a = add_edge(ends);
      auto b = add_edge({layout.image[ends.first], layout.image[ends.second]});
      doc.edge_map.emplace_back(a, b);
      doc.edge_map.emplace_back(b, a);
    }
  }
  return EquivariantGraph::from_document(doc);
}

bool connected(const EquivariantGraph& g) {
  return induced_components(g, std::vector<bool>(g.vertex_count(), true)).size() == 1;
}

// Bijections onto the standard layout (fixed vertices first, then pairs)
// that carry the involution to the layout's: order the fixed vertices, order
// the pairs, and optionally swap inside each pair.
std::vector<std::vector<VertexIndex>> equivariant_permutations(const EquivariantGraph& g) {
  std::vector<VertexIndex> fixed;
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_fixed_vertex(v)) {
      fixed.push_back(v);
    } else if (v < g.vertex_image(v)) {
      pairs.emplace_back(v, g.vertex_image(v));
    }
  }
  std::vector<std::vector<VertexIndex>> perms;
  std::vector<std::size_t> fperm(fixed.size());
  std::iota(fperm.begin(), fperm.end(), 0);
  do {
    std::vector<std::size_t> pperm(pairs.size());
    std::iota(pperm.begin(), pperm.end(), 0);
    do {
      for (std::uint32_t flips = 0; flips < (1u << pairs.size()); ++flips) {
        std::vector<VertexIndex> sigma(g.vertex_count());
        for (std::size_t k = 0; k < fixed.size(); ++k) sigma[fixed[k]] = fperm[k];
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          std::pair<VertexIndex, VertexIndex> target{fixed.size() + 2 * pperm[k], fixed.size() + 2 * pperm[k] + 1};
          if (flips >> k & 1) std::swap(target.first, target.second);
          sigma[pairs[k].first] = target.first;
          sigma[pairs[k].second] = target.second;
        }
        perms.push_back(std::move(sigma));
      }
    } while (std::next_permutation(pperm.begin(), pperm.end()));
  } while (std::next_permutation(fperm.begin(), fperm.end()));
  return perms;
}

}  // namespace

std::string canonical_key(const EquivariantGraph& g) {
  std::string best;
  bool first = true;
  for (const auto& sigma : equivariant_permutations(g)) {
    std::vector<VertexIndex> image(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) image[sigma[v]] = sigma[g.vertex_image(v)];
    std::vector<std::tuple<int, VertexIndex, VertexIndex>> orbits;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (orbit_rep(g, e) != e) continue;
      Ends ends = sorted_ends(sigma[g.edges()[e].tail], sigma[g.edges()[e].head]);
      if (g.is_fixed_edge(e)) {
        orbits.emplace_back(0, ends.first, ends.second);
      } else {
        Ends cls = pair_class(image, ends);
        orbits.emplace_back(1, cls.first, cls.second);
      }
    }
    std::sort(orbits.begin(), orbits.end());
    std::string key;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) key += std::to_string(image[v]) + ",";
    key += "|";
    for (auto [kind, a, b] : orbits) key += std::to_string(kind) + ":" + std::to_string(a) + "-" + std::to_string(b) + ";";
    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  }
  return best;
}

void for_each_graph(const GenSpec& spec, const std::function<void(const EquivariantGraph&)>& visit) {
  spec.check();
  for (int f = 0; f <= spec.max_fixed_vertices; ++f) {
    for (int p = 0; p <= spec.max_vertex_pairs; ++p) {
      if (f + p == 0) continue;
      Layout layout(f, p);
      SlotTypes slots = slot_types(layout, spec.allow_loops);
      std::set<std::string> seen;
      const int fixed_budget = std::min(spec.max_fixed_edges, spec.max_edge_orbits);
      for_each_multiset(slots.fixed.size(), fixed_budget, [&](const std::vector<int>& fixed_counts) {
        const int used = std::accumulate(fixed_counts.begin(), fixed_counts.end(), 0);
        const int pair_budget = std::min(spec.max_edge_pairs, spec.max_edge_orbits - used);
        for_each_multiset(slots.pairs.size(), pair_budget, [&](const std::vector<int>& pair_counts) {
          EquivariantGraph g = build_graph(layout, slots, fixed_counts, pair_counts);
          if (!connected(g)) return;
          if (spec.dedup && !seen.insert(canonical_key(g)).second) return;
          visit(g);
        });
      });
    }
  }
}

std::vector<EquivariantGraph> enumerate_graphs(const GenSpec& spec) {
  std::vector<EquivariantGraph> out;
  for_each_graph(spec, [&](const EquivariantGraph& g) { out.push_back(g); });
  return out;
}

EquivariantGraph relabel(const EquivariantGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> vnames(g.vertex_count());
  std::vector<std::size_t> enames(g.edge_count());
  std::iota(vnames.begin(), vnames.end(), 0);
  std::iota(enames.begin(), enames.end(), 0);
  std::shuffle(vnames.begin(), vnames.end(), rng);
  std::shuffle(enames.begin(), enames.end(), rng);
  auto vid = [&](VertexIndex v) { return numbered('x', vnames[v]); };
  auto eid = [&](EdgeIndex e) { return numbered('y', enames[e]); };

  GraphDocument doc;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    doc.vertices.push_back({vid(v), g.vertices()[v].genus});
    doc.vertex_map.emplace_back(vid(v), vid(g.vertex_image(v)));
  }
  std::bernoulli_distribution flip(0.5);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    // Fixed edges keep their direction; ordinary edges may be reversed since
    // orientation is re-normalized downstream.
    bool reverse = !g.is_fixed_edge(e) && flip(rng);
    doc.edges.push_back({eid(e), vid(reverse ? edge.head : edge.tail), vid(reverse ? edge.tail : edge.head)});
    doc.edge_map.emplace_back(eid(e), eid(g.edge_image(e)));
  }
  return EquivariantGraph::from_document(doc);
}

namespace {

Int cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntRow row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Int term = checked_mul(m[0][c], cofactor_determinant(minor));
    total = checked_add(total, c % 2 == 0 ? term : -term);
  }
  return total;
}

}  // namespace

std::string verify_witness(const FunctionalMatrix& m, const DicingWitness& w) {
  if (w.row_indices.size() != m.d) return "witness subset has the wrong size";
  IntMatrix sub;
  for (auto i : w.row_indices) {
    if (i >= m.rows.size()) return "witness row out of range";
    sub.push_back(m.rows[i].values);
  }
  const Int det = cofactor_determinant(sub);
  if (det != w.determinant) return "determinant does not recompute";
  if (det > -2 && det < 2) return "witness minor is unimodular or singular";

  // Substitution: m_j z_j(point) with z_j = doubled coordinate / 2.
  for (std::size_t k = 0; k < w.row_indices.size(); ++k) {
    const auto& row = m.rows[w.row_indices[k]];
    if (row.orbit_rep >= w.point.size()) return "point has too few coordinates";
    Rational value = w.point[row.orbit_rep] * Rational(row.multiplier, 2);
    Rational expected = k == w.rhs_index ? 1 : 0;
    if (value != expected) return "point does not lie on hyperplane of orbit '" + row.orbit_id + "'";
  }

  // Membership: back-substitute along the pivots of the tagged HNF basis.
  const IntMatrix basis = m.tagged_basis();
  const auto pivots = pivot_columns(basis);
  std::vector<Rational> coeffs;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    Rational residual = w.point[pivots[r]];
    for (std::size_t q = 0; q < r; ++q) residual -= coeffs[q] * basis[q][pivots[r]];
    coeffs.push_back(residual / basis[r][pivots[r]]);
  }
  for (std::size_t e = 0; e < w.point.size(); ++e) {
    Rational sum = 0;
    for (std::size_t r = 0; r < basis.size(); ++r) sum += coeffs[r] * basis[r][e];
    if (sum != w.point[e]) return "point is not in the span of the lattice";
  }
  if (is_integral(coeffs)) return "point lies in the lattice";
  return {};
}

std::vector<std::string> ConsistencyRecord::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [name, status] : checks) {
    if (status == "fail") out.push_back(name);
  }
  return out;
}

nlohmann::json ConsistencyRecord::to_json() const {
  nlohmann::json j = {{"graph", graph}, {"has_loops", has_loops}, {"d", d},     {"n_e", n_e},
                      {"c_e", c_e},     {"star", star},           {"starstar", starstar},
                      {"fs2", fs2},     {"fs4", fs4},             {"has_type2", has_type2},
                      {"checks", checks}};
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

namespace {

void put(ConsistencyRecord& rec, const std::string& name, bool ok) { rec.checks[name] = ok ? "pass" : "fail"; }

// Lemma check: every pair of disjoint invariant connected vertex sets meeting
// the hypothesis completes to a valid FS witness.
bool lemma_completion_holds(const EquivariantGraph& g, std::vector<std::string>& notes) {
  std::vector<std::vector<VertexIndex>> orbits;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_image(v) == v) orbits.push_back({v});
    if (g.vertex_image(v) > v) orbits.push_back({v, g.vertex_image(v)});
  }
  if (orbits.size() > 8) return true;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < orbits.size(); ++i) combos *= 3;
  const auto bold = bold_subgraph(g);
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<int> side(g.vertex_count(), 0);
    std::size_t c = code;
    for (const auto& orbit : orbits) {
      for (VertexIndex v : orbit) side[v] = static_cast<int>(c % 3);
      c /= 3;
    }
    SubgraphPair pair;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (side[v] == 1) pair.vertices1.push_back(v);
      if (side[v] == 2) pair.vertices2.push_back(v);
    }
    if (pair.vertices1.empty() || pair.vertices2.empty() || pair.vertices1.front() > pair.vertices2.front()) continue;
    int joining = 0;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      if (side[edge.tail] == side[edge.head]) {
        if (side[edge.tail] == 1) pair.edges1.push_back(e);
        if (side[edge.tail] == 2) pair.edges2.push_back(e);
      } else if (side[edge.tail] * side[edge.head] == 2 && !g.is_fixed_edge(e)) {
        ++joining;
      }
    }
    if (joining < 2) continue;
    bool bold_path = false;
    for (const auto& comp : bold.components) {
      bool m1 = false, m2 = false;
      for (VertexIndex v : comp) {
        m1 |= side[v] == 1;
        m2 |= side[v] == 2;
      }
      bold_path |= m1 && m2;
    }
    if (bold_path) continue;
    std::vector<bool> s1(g.vertex_count()), s2(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      s1[v] = side[v] == 1;
      s2[v] = side[v] == 2;
    }
    if (induced_components(g, s1).size() != 1 || induced_components(g, s2).size() != 1) continue;
    try {
      FSWitness w = complete_subgraph_pair(g, pair, joining);
      std::string problem = check_fs_witness(g, w);
      if (!problem.empty() || w.crossing_count < joining) {
        notes.push_back("lemma completion: " + (problem.empty() ? std::string("lost crossings") : problem));
        return false;
      }
    } catch (const std::exception& e) {
      notes.push_back(std::string("lemma completion threw: ") + e.what());
      return false;
    }
  }
  return true;
}

}  // namespace

ConsistencyRecord check_graph(const EquivariantGraph& input, const CheckOptions& options) {
  ConsistencyRecord rec;
  rec.graph = graph_to_json(input);
  rec.graph_encoding = rec.graph.dump();
  rec.has_loops = input.has_loops();

  DicingAnalysis a;
  try {
    a = analyze_dicing(input);
  } catch (const InvariantViolation& e) {
    rec.notes.push_back(std::string("pipeline invariant violated: ") + e.what());
    for (const char* name : {"theorem1", "theorem2_i_iii", "theorem2_ii_iii", "rank", "antisymmetry", "gcd_bound",
                             "oracle_dicing", "classifier_agreement"}) {
      rec.checks[name] = "fail";
    }
    return rec;
  }
  const auto& g = a.oriented;
  rec.d = static_cast<int>(a.lattice.rank);
  rec.n_e = a.validation.n_e;
  rec.c_e = a.validation.c_e;
  rec.has_type2 = std::any_of(a.classes.begin(), a.classes.end(),
                              [](const EdgeClass& c) { return c.type == EdgeType::kIntegral; });

  if (options.mutant_starstar) {
    a.star_star = a.star;
    a.star_star.tag = LatticeTag::kStarStar;
    for (auto& row : a.star_star.rows) row.multiplier = 1;
    a.star_star_verdict = is_dicing(a.star_star);
  }
  rec.star = a.star_verdict.is_dicing;
  rec.starstar = a.star_star_verdict.is_dicing;

  const auto bipartitions = fs_bipartitions(g);
  const auto fs2 = best_fs_witness(bipartitions, 2);
  const auto fs4 = best_fs_witness(bipartitions, 4);
  rec.fs2 = fs2.has_value();
  rec.fs4 = fs4.has_value();

  put(rec, "theorem1", rec.star == !rec.fs4);
  put(rec, "theorem2_i_iii", rec.starstar == !rec.fs2);
  put(rec, "theorem2_ii_iii", rec.starstar == (rec.star && !rec.has_type2));
  put(rec, "rank", rec.d == rec.n_e - rec.c_e);

  bool antisymmetric = true;
  for (const auto& row : a.lattice.basis) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) antisymmetric &= row.coords[e] == -row.coords[g.edge_image(e)];
  }
  put(rec, "antisymmetry", antisymmetric);

  bool gcd_ok = true;
  for (Int gcd : a.lattice.edge_gcds) gcd_ok &= gcd >= 0 && gcd <= 2;
  for (EdgeIndex e : a.validation.bold_edges) gcd_ok &= a.lattice.edge_gcds[e] == 0;
  put(rec, "gcd_bound", gcd_ok);

  bool conserved = true;
  for (const auto& row : a.lattice.basis) {
    for (Int x : boundary(g, row)) conserved &= x == 0;
  }
  for (const auto& omega : fundamental_cycles(g).chains) {
    for (Int x : boundary(g, omega)) conserved &= x == 0;
  }
  put(rec, "cycle_conservation", conserved);

  if (a.lattice.rank <= options.oracle_max_d) {
    BruteforceOptions bf{options.oracle_max_d};
    bool agree = dicing_bruteforce(a.star, a.lattice, bf) == rec.star &&
                 dicing_bruteforce(a.star_star, a.lattice, bf) == rec.starstar;
    put(rec, "oracle_dicing", agree);
  } else {
    rec.checks["oracle_dicing"] = "skip";
  }

  const auto cycles = simple_cycles(g, {options.cycle_cap});
  bool classifiers_agree = true;
  for (const auto& cls : a.classes) {
    if (classify_edge_by_cycles(g, cls.orbit_rep, cycles) != cls.type) {
      classifiers_agree = false;
      rec.notes.push_back("classifier disagreement on orbit '" + g.edges()[cls.orbit_rep].id + "'");
    }
  }
  put(rec, "classifier_agreement", classifiers_agree);

  // Simple cycles must land in the lattice generated by fundamental cycles.
  bool simple_generated = true;
  {
    const IntMatrix basis = a.lattice.basis_matrix();
    for (const auto& omega : cycles) {
      IntMatrix rows = basis;
      Chain image = involution_on_chain(g, omega);
      IntRow h(g.edge_count());
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) h[e] = (omega.coords[e] - image.coords[e]) / 2;
      rows.push_back(h);
      simple_generated &= hermite_normal_form(rows) == basis;
    }
  }
  put(rec, "simple_cycle_generation", simple_generated);

  put(rec, "matrix_rank",
      rational_rank(a.star.values()) == a.lattice.rank && rational_rank(a.star_star.values()) == a.lattice.rank);

  bool scaled = a.star.rows.size() == a.star_star.rows.size();
  for (std::size_t r = 0; scaled && r < a.star.rows.size(); ++r) {
    Int gcd = a.lattice.edge_gcds[a.star.rows[r].orbit_rep];
    for (std::size_t k = 0; k < a.star.rows[r].values.size(); ++k) {
      scaled &= a.star_star.rows[r].values[k] == gcd * a.star.rows[r].values[k];
    }
  }
  put(rec, "row_scaling", scaled);
  put(rec, "starstar_implies_star", !rec.starstar || rec.star);
  put(rec, "type2_forces_starstar_failure", !(rec.has_type2 && rec.d >= 1) || !rec.starstar);

  bool deletion_ok = true;
  {
    const std::size_t d = a.lattice.rank;
    const auto& rows = a.star.rows;
    if (d > 0 && d <= rows.size()) {
      std::vector<bool> pick(rows.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
      do {
        std::vector<EdgeIndex> subset;
        IntMatrix sub;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (!pick[r]) continue;
          subset.push_back(rows[r].orbit_rep);
          sub.push_back(rows[r].values);
        }
        bool independent = rational_rank(sub) == d;
        if (deletion_criterion(a, subset) != independent) {
          deletion_ok = false;
          rec.notes.push_back("deletion criterion disagrees with row independence");
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  put(rec, "deletion_criterion", deletion_ok);

  bool witnesses_ok = true;
  for (const auto* pair : {&a.star, &a.star_star}) {
    const auto& verdict = pair == &a.star ? a.star_verdict : a.star_star_verdict;
    if (verdict.is_dicing) continue;
    if (!verdict.witness) {
      witnesses_ok = false;
      continue;
    }
    std::string problem = verify_witness(*pair, *verdict.witness);
    if (!problem.empty()) {
      witnesses_ok = false;
      rec.notes.push_back(std::string("witness for ") + tag_name(pair->tag) + ": " + problem);
    }
  }
  put(rec, "witness_soundness", witnesses_ok);

  bool fs_ok = !rec.fs4 || rec.fs2;
  for (const auto& w : bipartitions) {
    std::string problem = check_fs_witness(g, w);
    if (!problem.empty()) {
      fs_ok = false;
      rec.notes.push_back("FS witness: " + problem);
    }
  }
  put(rec, "fs_witness_validity", fs_ok);
  put(rec, "lemma_completion", lemma_completion_holds(g, rec.notes));
  return rec;
}

nlohmann::json SuiteReport::to_json(const GenSpec& spec) const {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, t] : tallies) checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
  return {{"schema_version", 1},
          {"spec", spec.to_json()},
          {"graphs", graphs},
          {"failed_graphs", failed_graphs},
          {"loop_involving_failures", loop_failures},
          {"checks", checks},
          {"success", success()}};
}

SuitePaths SuitePaths::from_prefix(const std::string& report_path) {
  return {report_path, report_path + ".summary.json", report_path + ".counterexamples.ndjson"};
}

SuiteReport run_suite(const GenSpec& spec, const SuitePaths& paths, const CheckOptions& options) {
  std::ofstream report(paths.report, std::ios::binary | std::ios::trunc);
  std::ofstream counterexamples(paths.counterexamples, std::ios::binary | std::ios::trunc);
  if (!report || !counterexamples) throw InputError("cannot write suite output next to '" + paths.report + "'");

  SuiteReport suite;
  for_each_graph(spec, [&](const EquivariantGraph& g) {
    ConsistencyRecord rec = check_graph(g, options);
    ++suite.graphs;
    for (const auto& [name, status] : rec.checks) {
      auto& tally = suite.tallies[name];
      if (status == "pass") ++tally.pass;
      if (status == "fail") ++tally.fail;
      if (status == "skip") ++tally.skip;
    }
    report << rec.to_json().dump() << '\n';
    auto failed = rec.failed_checks();
    if (!failed.empty()) {
      ++suite.failed_graphs;
      if (rec.has_loops) ++suite.loop_failures;
      nlohmann::json doc = rec.graph;
      doc["failed_checks"] = failed;
      doc["involves_loops"] = rec.has_loops;
      counterexamples << doc.dump() << '\n';
    }
  });

  std::ofstream summary(paths.summary, std::ios::binary | std::ios::trunc);
  if (!summary) throw InputError("cannot write '" + paths.summary + "'");
  summary << suite.to_json(spec).dump(2) << '\n';
  if (!report || !counterexamples || !summary) throw InputError("write failure while saving suite output");
  return suite;
}

}  // namespace prym
