#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "prymlocus/graph.hpp"
#include "prymlocus/intmat.hpp"

namespace prym {

/// Integer chain on the edges of a graph, in DOUBLED units: coords[j] stores
/// twice the true coefficient of edge j. Half-integral points of X^- are
/// therefore integral here. An integral cycle has only even entries.
struct Chain {
  IntRow coords;

  bool operator==(const Chain&) const = default;
};

struct CycleBasis {
  std::vector<Chain> chains;
  std::vector<EdgeIndex> tree_edges;
};

/// One simple cycle per chord of a lexicographic BFS spanning forest, with
/// chord coefficient +1. Works on disconnected graphs (one tree per component).
CycleBasis fundamental_cycles(const EquivariantGraph& g);

// Boundary of a chain (in the same doubled units), indexed by vertex.
IntRow boundary(const EquivariantGraph& g, const Chain& c);

/// Pushes a chain forward along the involution: result[i(j)] = c[j].
/// Requires an involution-compatible orientation.
Chain involution_on_chain(const EquivariantGraph& g, const Chain& c);

/// The anti-invariant lattice X^- = {(w - i(w))/2 : w integral cycle}.
struct AntiInvariantLattice {
  // HNF rows in doubled units: each row is 2x for a generator x of X^-.
  std::vector<Chain> basis;
  std::size_t rank = 0;
  // gcd of each edge coordinate over the basis rows (doubled units).
  IntRow edge_gcds;

  IntMatrix basis_matrix() const;
};

/// Generators w_k - i(w_k) over the fundamental cycles, reduced to HNF.
/// Requires a valid, compatibly oriented graph.
AntiInvariantLattice anti_invariant_lattice(const EquivariantGraph& g);

/// Same computation without the connectivity requirement, for subgraphs
/// obtained by deleting edge orbits.
AntiInvariantLattice anti_invariant_lattice_of(const EquivariantGraph& g);

/// n_e - c_e, the rank of X^- predicted from orbit counts.
int rank_formula(const EquivariantGraph& g);

enum class EdgeType : int { kVanishing = 1, kIntegral = 2, kHalfIntegral = 3 };

inline int type_number(EdgeType t) { return static_cast<int>(t); }

struct EdgeClass {
  EdgeIndex orbit_rep = 0;
  EdgeIndex partner = 0;
  EdgeType type = EdgeType::kVanishing;
  int multiplier = 0;  // 1 for type 2, 2 for type 3, 0 for type 1
  Int gcd = 0;
  IntRow basis_values;  // z_rep on each basis row, doubled units
};

/// One class per edge orbit, ordered by representative. Throws
/// InvariantViolation if some gcd falls outside {0, 1, 2}.
std::vector<EdgeClass> classify_edges(const AntiInvariantLattice& lat, const EquivariantGraph& g);

struct SimpleCycleOptions {
  std::size_t cap = 1'000'000;
};

/// Every simple cycle exactly once (up to sign and rotation), including loops
/// and two-edge cycles through parallel edges. Deterministic order. Throws
/// CapExceeded past the cap.
std::vector<Chain> simple_cycles(const EquivariantGraph& g, SimpleCycleOptions options = {});

/// Edge type from the simple-cycle characterization alone; independent of
/// the lattice computation. Requires a compatible orientation.
EdgeType classify_edge_by_cycles(const EquivariantGraph& g, EdgeIndex edge, SimpleCycleOptions options = {});
EdgeType classify_edge_by_cycles(const EquivariantGraph& g, EdgeIndex edge, const std::vector<Chain>& cycles);

}  // namespace prym
