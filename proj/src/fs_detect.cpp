#include "prymlocus/fs_detect.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "prymlocus/error.hpp"

namespace prym {

namespace {

std::vector<std::vector<VertexIndex>> vertex_orbits(const EquivariantGraph& g) {
  std::vector<std::vector<VertexIndex>> orbits;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    VertexIndex w = g.vertex_image(v);
    if (w < v) continue;
    orbits.push_back(w == v ? std::vector<VertexIndex>{v} : std::vector<VertexIndex>{v, w});
  }
  return orbits;
}

bool induces_connected(const EquivariantGraph& g, const std::vector<bool>& in_set) {
  return induced_components(g, in_set).size() == 1;
}

// Builds the witness for side flags, or nullopt if some invariant fails.
std::optional<FSWitness> witness_from_sides(const EquivariantGraph& g, const std::vector<bool>& side1) {
  std::vector<bool> side2(side1.size());
  for (std::size_t v = 0; v < side1.size(); ++v) side2[v] = !side1[v];
  FSWitness w;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) (side1[v] ? w.part1 : w.part2).push_back(v);
  if (w.part1.empty() || w.part2.empty()) return std::nullopt;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (side1[v] != side1[g.vertex_image(v)]) return std::nullopt;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    if (side1[edge.tail] == side1[edge.head]) continue;
    if (g.is_fixed_edge(e)) return std::nullopt;
    ++w.crossing_count;
    if (orbit_rep(g, e) == e) w.crossing_orbits.emplace_back(e, g.edge_image(e));
  }
  if (!induces_connected(g, side1) || !induces_connected(g, side2)) return std::nullopt;
  if (w.part1.front() != 0) std::swap(w.part1, w.part2);
  return w;
}

}  // namespace

std::vector<FSWitness> fs_bipartitions(const EquivariantGraph& g, FSOptions options) {
  require_valid(g);
  const auto orbits = vertex_orbits(g);
  if (orbits.size() > options.orbit_cap || orbits.size() >= 63) {
    throw CapExceeded("FS bipartition search limited to " + std::to_string(options.orbit_cap) +
                      " vertex orbits, graph has " + std::to_string(orbits.size()));
  }
  std::vector<FSWitness> out;
  if (orbits.size() < 2) return out;
  const std::uint64_t full = (std::uint64_t{1} << orbits.size()) - 1;
  // Orbit 0 holds vertex 0 and always sits in part1, which suppresses complements.
  for (std::uint64_t mask = 1; mask < full; mask += 2) {
    std::vector<bool> side1(g.vertex_count(), false);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (mask >> o & 1) {
        for (VertexIndex v : orbits[o]) side1[v] = true;
      }
    }
    if (auto w = witness_from_sides(g, side1)) out.push_back(std::move(*w));
  }
  return out;
}

std::optional<FSWitness> best_fs_witness(const std::vector<FSWitness>& witnesses, int min_edges) {
  if (min_edges < 2 || min_edges % 2 != 0) {
    throw InputError("minimum FS edge count must be a positive even number, got " + std::to_string(min_edges));
  }
  const FSWitness* best = nullptr;
  for (const auto& w : witnesses) {
    if (w.crossing_count < min_edges) continue;
    if (best == nullptr || w.crossing_count > best->crossing_count) best = &w;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<FSWitness> is_fs_degeneration(const EquivariantGraph& g, int min_edges, FSOptions options) {
  if (min_edges < 2 || min_edges % 2 != 0) {
    throw InputError("minimum FS edge count must be a positive even number, got " + std::to_string(min_edges));
  }
  return best_fs_witness(fs_bipartitions(g, options), min_edges);
}

std::string check_fs_witness(const EquivariantGraph& g, const FSWitness& w) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, 0);
  for (VertexIndex v : w.part1) {
    if (v >= n || side[v] != 0) return "part1 repeats or has an out-of-range vertex";
    side[v] = 1;
  }
  for (VertexIndex v : w.part2) {
    if (v >= n || side[v] != 0) return "parts overlap or part2 has an out-of-range vertex";
    side[v] = 2;
  }
  if (w.part1.empty() || w.part2.empty()) return "empty part";
  for (VertexIndex v = 0; v < n; ++v) {
    if (side[v] == 0) return "vertex '" + g.vertices()[v].id + "' in neither part";
    if (side[v] != side[g.vertex_image(v)]) return "part not invariant at '" + g.vertices()[v].id + "'";
  }
  for (int s : {1, 2}) {
    std::vector<bool> flags(n);
    for (VertexIndex v = 0; v < n; ++v) flags[v] = side[v] == s;
    if (induced_components(g, flags).size() != 1) return "part" + std::to_string(s) + " is disconnected";
  }
  int crossing = 0;
  std::set<std::pair<EdgeIndex, EdgeIndex>> orbits;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    if (side[edge.tail] == side[edge.head]) continue;
    if (g.is_fixed_edge(e)) return "bold edge '" + edge.id + "' crosses the bipartition";
    ++crossing;
    orbits.emplace(orbit_rep(g, e), g.edge_image(orbit_rep(g, e)));
  }
  if (crossing != w.crossing_count) return "crossing count mismatch";
  if (crossing % 2 != 0) return "odd crossing count";
  if (std::set<std::pair<EdgeIndex, EdgeIndex>>(w.crossing_orbits.begin(), w.crossing_orbits.end()) != orbits ||
      static_cast<int>(orbits.size()) * 2 != crossing) {
    return "crossing orbit list mismatch";
  }
  return {};
}

FSWitness complete_subgraph_pair(const EquivariantGraph& g, const SubgraphPair& pair, int min_edges) {
  require_valid(g);
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, 0);
  std::vector<int> edge_side(g.edge_count(), 0);

  auto load = [&](const std::vector<VertexIndex>& vs, const std::vector<EdgeIndex>& es, int s) {
    for (VertexIndex v : vs) {
      if (v >= n) throw InputError("subgraph vertex out of range");
      if (side[v] != 0) throw InputError("subgraphs are not disjoint");
      side[v] = s;
    }
    for (EdgeIndex e : es) {
      if (e >= g.edge_count()) throw InputError("subgraph edge out of range");
      const auto& edge = g.edges()[e];
      if (side[edge.tail] != s || side[edge.head] != s) throw InputError("subgraph edge leaves its subgraph");
      edge_side[e] = s;
    }
    if (vs.empty()) throw InputError("subgraph is empty");
  };
  load(pair.vertices1, pair.edges1, 1);
  load(pair.vertices2, pair.edges2, 2);

  for (VertexIndex v = 0; v < n; ++v) {
    if (side[v] != side[g.vertex_image(v)]) throw InputError("subgraph is not equivariant");
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (edge_side[e] != edge_side[g.edge_image(e)]) throw InputError("subgraph is not equivariant");
  }
  // Connectivity of each subgraph through its own edges.
  for (int s : {1, 2}) {
    std::vector<VertexIndex> parent(n);
    for (VertexIndex v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](VertexIndex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (edge_side[e] == s) parent[find(g.edges()[e].tail)] = find(g.edges()[e].head);
    }
    std::set<VertexIndex> roots;
    for (VertexIndex v = 0; v < n; ++v) {
      if (side[v] == s) roots.insert(find(v));
    }
    if (roots.size() != 1) throw InputError("subgraph " + std::to_string(s) + " is not connected");
  }

  int connecting = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    if (side[edge.tail] * side[edge.head] == 2 && !g.is_fixed_edge(e)) ++connecting;
  }
  if (connecting < min_edges) {
    throw InputError("subgraphs are joined by " + std::to_string(connecting) + " ordinary edges, need " +
                     std::to_string(min_edges));
  }

  // (a) absorb bold components meeting a side; none may meet both.
  const auto bold = bold_subgraph(g);
  for (const auto& comp : bold.components) {
    bool meets1 = false;
    bool meets2 = false;
    for (VertexIndex v : comp) {
      meets1 |= side[v] == 1;
      meets2 |= side[v] == 2;
    }
    if (meets1 && meets2) throw InputError("subgraphs are joined by a bold path");
    if (meets1 || meets2) {
      for (VertexIndex v : comp) side[v] = meets1 ? 1 : 2;
    }
  }

  // (b, c) components of the complement attached to one side only join that side.
  std::vector<bool> rest(n);
  for (VertexIndex v = 0; v < n; ++v) rest[v] = side[v] == 0;
  for (const auto& comp : induced_components(g, rest)) {
    std::vector<bool> member(n, false);
    for (VertexIndex v : comp) member[v] = true;
    bool touches1 = false;
    bool touches2 = false;
    for (const auto& edge : g.edges()) {
      for (auto [a, b] : {std::pair{edge.tail, edge.head}, std::pair{edge.head, edge.tail}}) {
        if (!member[a]) continue;
        touches1 |= side[b] == 1;
        touches2 |= side[b] == 2;
      }
    }
    if (touches1 && !touches2) {
      for (VertexIndex v : comp) side[v] = 1;
    } else if (touches2 && !touches1) {
      for (VertexIndex v : comp) side[v] = 2;
    }
  }

  // (d) everything not in the first part forms the second.
  std::vector<bool> side1(n);
  for (VertexIndex v = 0; v < n; ++v) side1[v] = side[v] == 1;
  auto w = witness_from_sides(g, side1);
  if (!w) throw InvariantViolation("subgraph completion produced an invalid bipartition");
  if (w->crossing_count < connecting) throw InvariantViolation("subgraph completion lost crossing edges");
  return *w;
}

std::vector<std::pair<int, int>> fs_component_genera(int g_param, int n) {
  if (n < 2) throw InputError("FS component formula needs n >= 2");
  if (g_param < n - 1) throw InputError("FS component formula needs g >= n - 1");
  const int total = g_param - n + 1;
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= total / 2; ++k) out.emplace_back(k, total - k);
  return out;
}

}  // namespace prym
