#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prymlocus/graph.hpp"
#include "prymlocus/homology.hpp"
#include "prymlocus/intmat.hpp"

namespace prym {

enum class LatticeTag { kStar, kStarStar };

const char* tag_name(LatticeTag tag);

/// Functionals expressed in the canonical (HNF) basis of X^-. STAR rows hold
/// m_j z_j evaluated on the basis of X^-; STARSTAR rows hold z_j evaluated on
/// the basis of 2X^-. Only orbit representatives of types 2 and 3 appear.
struct FunctionalMatrix {
  struct Row {
    EdgeIndex orbit_rep = 0;
    std::string orbit_id;
    int multiplier = 1;  // m_j for STAR rows, 1 for STARSTAR rows
    IntRow values;
  };
  std::vector<Row> rows;
  LatticeTag tag = LatticeTag::kStar;
  std::size_t d = 0;
  // HNF basis of X^- in doubled units. The tagged lattice is X^- (STAR) or 2X^- (STARSTAR).
  std::vector<Chain> lattice_basis;

  IntMatrix values() const;
  // Basis of the tagged lattice, in doubled units.
  IntMatrix tagged_basis() const;
};

struct DicingWitness {
  std::vector<std::string> row_subset;
  std::vector<std::size_t> row_indices;
  Int determinant = 0;
  std::size_t rhs_index = 0;               // position of the 1 in the unit right-hand side
  std::vector<Rational> basis_coordinates;  // solution in the tagged lattice's basis
  std::vector<Rational> point;              // edge coordinates, doubled units
  std::string membership_defect;
};

struct DicingVerdict {
  bool is_dicing = true;
  std::optional<DicingWitness> witness;
};

FunctionalMatrix star_matrix(const AntiInvariantLattice& lat, const std::vector<EdgeClass>& classes,
                             const EquivariantGraph& g);
FunctionalMatrix star_star_matrix(const AntiInvariantLattice& lat, const std::vector<EdgeClass>& classes,
                                  const EquivariantGraph& g);

/// Dicing iff every maximal (d x d) minor lies in {0, +1, -1}. On failure
/// the witness is the first nonsingular subsystem in lexicographic subset
/// order with |det| >= 2, solved at the first unit right-hand side whose
/// solution leaves the lattice.
DicingVerdict is_dicing(const FunctionalMatrix& m);

struct BruteforceOptions {
  std::size_t max_d = 6;
};

/// Definition-level oracle: solves every nonsingular d-subsystem at every unit
/// right-hand side and tests lattice membership of the resulting point.
/// Throws CapExceeded when d exceeds options.max_d.
bool dicing_bruteforce(const FunctionalMatrix& m, const AntiInvariantLattice& lat, BruteforceOptions options = {});

/// Everything the dicing conditions need, computed once per graph.
struct DicingAnalysis {
  EquivariantGraph oriented;
  ValidationReport validation;
  AntiInvariantLattice lattice;
  std::vector<EdgeClass> classes;
  FunctionalMatrix star;
  FunctionalMatrix star_star;
  DicingVerdict star_verdict;
  DicingVerdict star_star_verdict;
};

/// validate -> auto_orient -> lattice -> classify -> matrices -> verdicts.
/// Throws InputError on an invalid graph.
DicingAnalysis analyze_dicing(const EquivariantGraph& g);

DicingVerdict condition_star(const EquivariantGraph& g);
DicingVerdict condition_star_star(const EquivariantGraph& g);

/// Whether deleting both edges of each listed orbit leaves an anti-invariant
/// lattice of rank 0. Orbits are given by any member edge. Throws InputError
/// if the subset size differs from d or contains a type-1 orbit.
bool deletion_criterion(const EquivariantGraph& g, const std::vector<EdgeIndex>& orbit_subset);

// Same criterion with the analysis already in hand; g must be analysis.oriented.
bool deletion_criterion(const DicingAnalysis& analysis, const std::vector<EdgeIndex>& orbit_subset);

}  // namespace prym
