#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymlocus/dicing.hpp"
#include "prymlocus/error.hpp"
#include "prymlocus/verify.hpp"
#include "test_support.hpp"

using namespace prym;
using prym::testing::cofactor_det;
using prym::testing::edge;
using prym::testing::fixture;

namespace {

// All d-row subsets of a matrix, by bitmask.
std::vector<IntMatrix> maximal_submatrices(const IntMatrix& m, std::size_t d) {
  std::vector<IntMatrix> out;
  for (std::uint32_t mask = 0; mask < (1u << m.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != d) continue;
    IntMatrix sub;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (mask >> r & 1) sub.push_back(m[r]);
    }
    out.push_back(sub);
  }
  return out;
}

bool unimodular_by_cofactors(const FunctionalMatrix& m) {
  if (m.d == 0) return true;
  for (const auto& sub : maximal_submatrices(m.values(), m.d)) {
    Int det = cofactor_det(sub);
    if (det > 1 || det < -1) return false;
  }
  return true;
}

GenSpec small_spec() {
  GenSpec spec;
  spec.max_edge_orbits = 4;
  return spec;
}

}  // namespace

TEST_CASE("functional matrices of FS(2)") {
  auto a = analyze_dicing(fixture("fs2"));
  CHECK(a.star.d == 1);
  CHECK(a.star.values() == IntMatrix{{1}});
  CHECK(a.star_star.values() == IntMatrix{{2}});
  CHECK(a.star.rows[0].multiplier == 1);
  CHECK(a.star_star.tagged_basis() == IntMatrix{{4, -4}});
  CHECK(a.star_verdict.is_dicing);
  CHECK_FALSE(a.star_star_verdict.is_dicing);

  const auto& w = *a.star_star_verdict.witness;
  CHECK(w.row_subset == std::vector<std::string>{"e1"});
  CHECK(w.determinant == 2);
  REQUIRE(w.basis_coordinates.size() == 1);
  CHECK(w.basis_coordinates[0] == Rational(1, 2));
  CHECK(w.point == std::vector<Rational>{Rational(2), Rational(-2)});
  CHECK(w.membership_defect.find("1/2") != std::string::npos);
  CHECK(verify_witness(a.star_star, w).empty());
}

TEST_CASE("functional matrices of FS(4)") {
  auto a = analyze_dicing(fixture("fs4"));
  CHECK(a.star.d == 2);
  REQUIRE(a.star.rows.size() == 2);
  CHECK(a.star.rows[0].orbit_id == "a1");
  CHECK(a.star.rows[1].orbit_id == "b1");
  CHECK(a.star.values() == IntMatrix{{1, 0}, {1, 2}});
  CHECK(cofactor_det(a.star.values()) == 2);
  CHECK_FALSE(a.star_verdict.is_dicing);
  CHECK_FALSE(a.star_star_verdict.is_dicing);

  // Solving [[1,0],[1,2]] t = (1,0) gives t = (1, -1/2), so the point is
  // (1,-1,1,-1) - (0,0,1,-1) = (1,-1,0,0) in doubled units.
  const auto& w = *a.star_verdict.witness;
  CHECK(w.determinant == 2);
  CHECK(w.rhs_index == 0);
  CHECK(w.basis_coordinates == std::vector<Rational>{Rational(1), Rational(-1, 2)});
  CHECK(w.point == std::vector<Rational>{Rational(1), Rational(-1), Rational(0), Rational(0)});
  CHECK(verify_witness(a.star, w).empty());
}

TEST_CASE("dicing of the remaining fixtures") {
  auto banana = analyze_dicing(fixture("boldbanana"));
  CHECK(banana.star.values() == IntMatrix{{1}});
  CHECK(banana.star_verdict.is_dicing);
  CHECK(banana.star_star_verdict.is_dicing);

  auto square = analyze_dicing(fixture("square"));
  CHECK(square.star.d == 0);
  CHECK(square.star_verdict.is_dicing);
  CHECK(square.star_star_verdict.is_dicing);

  CHECK_FALSE(condition_star(fixture("fs4tail")).is_dicing);
  CHECK_FALSE(condition_star(fixture("fs6")).is_dicing);
  CHECK_THROWS_AS(condition_star(fixture("type2_node")), InputError);
}

TEST_CASE("verdicts agree with cofactor minors and the brute-force oracle") {
  std::size_t failing_star = 0;
  for_each_graph(small_spec(), [&](const EquivariantGraph& g) {
    auto a = analyze_dicing(g);
    for (const auto* pair : {&a.star, &a.star_star}) {
      const auto& m = *pair;
      const auto& v = m.tag == LatticeTag::kStar ? a.star_verdict : a.star_star_verdict;
      CHECK(v.is_dicing == unimodular_by_cofactors(m));
      CHECK(v.is_dicing == dicing_bruteforce(m, a.lattice));
      CHECK(v.is_dicing == !v.witness.has_value());
      if (v.witness) CHECK(verify_witness(m, *v.witness).empty());
    }
    if (a.star_star_verdict.is_dicing) CHECK(a.star_verdict.is_dicing);
    failing_star += !a.star_verdict.is_dicing;
  });
  CHECK(failing_star > 0);
}

TEST_CASE("verify_witness rejects tampered witnesses") {
  auto a = analyze_dicing(fixture("fs4"));
  auto w = *a.star_verdict.witness;
  auto bad_det = w;
  bad_det.determinant = 3;
  CHECK_FALSE(verify_witness(a.star, bad_det).empty());
  auto bad_point = w;
  bad_point.point[0] = Rational(5);
  CHECK_FALSE(verify_witness(a.star, bad_point).empty());
  auto inside = w;
  inside.basis_coordinates = {Rational(1), Rational(0)};
  inside.point = {Rational(1), Rational(-1), Rational(1), Rational(-1)};
  CHECK_FALSE(verify_witness(a.star, inside).empty());
}

TEST_CASE("brute-force oracle cap") {
  auto a = analyze_dicing(fixture("fs6"));
  CHECK(a.star.d == 3);
  CHECK_THROWS_AS(dicing_bruteforce(a.star, a.lattice, BruteforceOptions{2}), CapExceeded);
}

TEST_CASE("deletion criterion examples") {
  auto fs4 = fixture("fs4");
  CHECK(deletion_criterion(fs4, {edge(fs4, "a1"), edge(fs4, "b2")}));
  CHECK_THROWS_AS(deletion_criterion(fs4, {edge(fs4, "a1")}), InputError);
  CHECK_THROWS_AS(deletion_criterion(fs4, {edge(fs4, "a1"), edge(fs4, "a2")}), InputError);

  auto banana = fixture("boldbanana");
  CHECK(deletion_criterion(banana, {edge(banana, "e1")}));
  CHECK_THROWS_AS(deletion_criterion(banana, {edge(banana, "b")}), InputError);

  auto fs6 = fixture("fs6");
  CHECK(deletion_criterion(fs6, {edge(fs6, "a1"), edge(fs6, "b1"), edge(fs6, "c1")}));
  CHECK_THROWS_AS(deletion_criterion(fs6, {edge(fs6, "a1"), edge(fs6, "b1")}), InputError);
}

TEST_CASE("deletion criterion matches nonvanishing minors") {
  std::size_t dependent = 0;
  for_each_graph(small_spec(), [&](const EquivariantGraph& g) {
    auto a = analyze_dicing(g);
    if (a.star.d == 0) return;
    const auto& rows = a.star.rows;
    for (std::uint32_t mask = 0; mask < (1u << rows.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.star.d) continue;
      std::vector<EdgeIndex> subset;
      IntMatrix sub;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!(mask >> r & 1)) continue;
        subset.push_back(rows[r].orbit_rep);
        sub.push_back(rows[r].values);
      }
      bool nonzero = cofactor_det(sub) != 0;
      CHECK(deletion_criterion(a, subset) == nonzero);
      dependent += !nonzero;
    }
  });
  CHECK(dependent > 0);
}
