#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prymlocus/graph.hpp"

namespace prym {

/// Equivariant vertex bipartition certifying a Friedman-Smith degeneration:
/// both parts involution-invariant and connected, every crossing edge ordinary.
struct FSWitness {
  std::vector<VertexIndex> part1;  // contains the smallest vertex id
  std::vector<VertexIndex> part2;
  std::vector<std::pair<EdgeIndex, EdgeIndex>> crossing_orbits;
  int crossing_count = 0;
};

/// Two disjoint equivariant connected subgraphs, given by vertex and edge sets.
struct SubgraphPair {
  std::vector<VertexIndex> vertices1;
  std::vector<EdgeIndex> edges1;
  std::vector<VertexIndex> vertices2;
  std::vector<EdgeIndex> edges2;
};

struct FSOptions {
  std::size_t orbit_cap = 20;
};

/// Every FS bipartition, enumerated over subsets of vertex orbits in
/// increasing bitmask order. Throws CapExceeded past the orbit cap.
std::vector<FSWitness> fs_bipartitions(const EquivariantGraph& g, FSOptions options = {});

/// Best witness with at least min_edges crossing edges (max count, first in
/// enumeration order on ties). min_edges must be a positive even number.
std::optional<FSWitness> is_fs_degeneration(const EquivariantGraph& g, int min_edges, FSOptions options = {});

// Picks from an already enumerated list.
std::optional<FSWitness> best_fs_witness(const std::vector<FSWitness>& witnesses, int min_edges);

/// Re-checks every FSWitness invariant from scratch. Returns an empty string
/// when valid, otherwise a description of the first failure.
std::string check_fs_witness(const EquivariantGraph& g, const FSWitness& w);

/// Grows a subgraph pair joined by >= min_edges ordinary edges and by no bold
/// path into a full FS bipartition: absorb meeting bold components, then
/// complement components attached to one side only, then give the rest to
/// the second part. Throws InputError when the precondition fails.
FSWitness complete_subgraph_pair(const EquivariantGraph& g, const SubgraphPair& pair, int min_edges);

/// Genus splittings (g1', g2') of the quotient components, one per
/// irreducible component of the closure of the FS locus with 2n edges.
std::vector<std::pair<int, int>> fs_component_genera(int g_param, int n);

}  // namespace prym
