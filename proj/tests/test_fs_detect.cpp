#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>

#include "prymlocus/error.hpp"
#include "prymlocus/fs_detect.hpp"
#include "prymlocus/verify.hpp"
#include "test_support.hpp"

using namespace prym;
using prym::testing::edge;
using prym::testing::fixture;
using prym::testing::vertex;
using prym::testing::vertex_names;

namespace {

using Names = std::vector<std::string>;

bool connected_subset(const EquivariantGraph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  VertexIndex start = __builtin_ctzll(mask);
  std::uint64_t seen = std::uint64_t{1} << start;
  std::queue<VertexIndex> todo;
  todo.push(start);
  while (!todo.empty()) {
    VertexIndex v = todo.front();
    todo.pop();
    for (const auto& e : g.edges()) {
      for (auto [a, b] : {std::pair{e.tail, e.head}, std::pair{e.head, e.tail}}) {
        if (a != v || !(mask >> b & 1) || (seen >> b & 1)) continue;
        seen |= std::uint64_t{1} << b;
        todo.push(b);
      }
    }
  }
  return seen == mask;
}

// Vertex sets (containing vertex 0) of every FS bipartition, straight from
// the definition over all vertex subsets.
std::set<std::uint64_t> fs_oracle(const EquivariantGraph& g) {
  std::set<std::uint64_t> out;
  const std::uint64_t full = (std::uint64_t{1} << g.vertex_count()) - 1;
  for (std::uint64_t mask = 1; mask < full; mask += 2) {
    bool ok = true;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      ok &= (mask >> v & 1) == (mask >> g.vertex_image(v) & 1);
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edges()[e];
      if ((mask >> ed.tail & 1) != (mask >> ed.head & 1)) ok &= !g.is_fixed_edge(e);
    }
    if (ok && connected_subset(g, mask) && connected_subset(g, full & ~mask)) out.insert(mask);
  }
  return out;
}

std::uint64_t mask_of(const std::vector<VertexIndex>& vs) {
  std::uint64_t m = 0;
  for (auto v : vs) m |= std::uint64_t{1} << v;
  return m;
}

std::vector<EdgeIndex> induced_edges(const EquivariantGraph& g, const std::vector<VertexIndex>& vs) {
  auto m = mask_of(vs);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if ((m >> g.edges()[e].tail & 1) && (m >> g.edges()[e].head & 1)) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("FS detection on the worked examples") {
  auto fs2 = fixture("fs2");
  auto w2 = is_fs_degeneration(fs2, 2);
  REQUIRE(w2);
  CHECK(w2->crossing_count == 2);
  CHECK(vertex_names(fs2, w2->part1) == Names{"v1"});
  CHECK(vertex_names(fs2, w2->part2) == Names{"v2"});
  CHECK(w2->crossing_orbits == std::vector<std::pair<EdgeIndex, EdgeIndex>>{{0, 1}});
  CHECK_FALSE(is_fs_degeneration(fs2, 4));

  auto fs4 = fixture("fs4");
  auto w4 = is_fs_degeneration(fs4, 4);
  REQUIRE(w4);
  CHECK(w4->crossing_count == 4);
  CHECK(w4->crossing_orbits.size() == 2);

  auto tail = fixture("fs4tail");
  auto wt = is_fs_degeneration(tail, 4);
  REQUIRE(wt);
  CHECK(vertex_names(tail, wt->part1) == Names{"v1"});
  CHECK(vertex_names(tail, wt->part2) == Names{"v2", "v3"});
  CHECK(fs_bipartitions(tail).size() == 1);

  CHECK(fs_bipartitions(fixture("boldbanana")).empty());
  CHECK(fs_bipartitions(fixture("square")).empty());
  CHECK(is_fs_degeneration(fixture("fs6"), 6)->crossing_count == 6);

  auto pendant = fixture("fs6_pendant");
  auto wp = is_fs_degeneration(pendant, 6);
  REQUIRE(wp);
  CHECK(vertex_names(pendant, wp->part1) == Names{"p1", "p2", "v1"});
  CHECK(vertex_names(pendant, wp->part2) == Names{"v2"});
}

TEST_CASE("FS detection rejects bad arguments") {
  auto fs2 = fixture("fs2");
  CHECK_THROWS_AS(is_fs_degeneration(fs2, 3), InputError);
  CHECK_THROWS_AS(is_fs_degeneration(fs2, 0), InputError);
  CHECK_THROWS_AS(best_fs_witness({}, -2), InputError);
  CHECK_THROWS_AS(fs_bipartitions(fixture("type2_node")), InputError);
  CHECK_THROWS_AS(fs_bipartitions(fixture("fs4tail"), FSOptions{2}), CapExceeded);
}

TEST_CASE("check_fs_witness catches tampering") {
  auto g = fixture("fs4");
  auto w = *is_fs_degeneration(g, 2);
  CHECK(check_fs_witness(g, w).empty());
  auto count = w;
  count.crossing_count = 2;
  CHECK(check_fs_witness(g, count) == "crossing count mismatch");
  auto orbits = w;
  orbits.crossing_orbits.pop_back();
  CHECK(check_fs_witness(g, orbits) == "crossing orbit list mismatch");
  auto overlap = w;
  overlap.part2.push_back(overlap.part1.front());
  CHECK_FALSE(check_fs_witness(g, overlap).empty());

  auto banana = fixture("boldbanana");
  FSWitness bold{{0}, {1}, {{1, 2}}, 2};
  CHECK(check_fs_witness(banana, bold).find("bold edge 'b'") != std::string::npos);
}

TEST_CASE("bipartitions match the definition on enumerated graphs") {
  GenSpec spec;
  spec.max_fixed_vertices = 3;
  spec.max_vertex_pairs = 1;
  spec.max_edge_orbits = 4;
  spec.dedup = true;
  std::size_t with_fs4 = 0;
  for_each_graph(spec, [&](const EquivariantGraph& g) {
    auto found = fs_bipartitions(g);
    std::set<std::uint64_t> masks;
    for (const auto& w : found) {
      CHECK(check_fs_witness(g, w).empty());
      CHECK(w.crossing_count % 2 == 0);
      CHECK(w.part1.front() == 0);
      masks.insert(mask_of(w.part1));
    }
    CHECK(masks.size() == found.size());
    CHECK(masks == fs_oracle(g));

    auto fs4 = best_fs_witness(found, 4);
    if (fs4) {
      ++with_fs4;
      CHECK(best_fs_witness(found, 2).has_value());
      for (const auto& w : found) CHECK(w.crossing_count <= fs4->crossing_count);
    }
  });
  CHECK(with_fs4 > 0);
}

TEST_CASE("subgraph completion examples") {
  auto tail = fixture("fs4tail");
  SubgraphPair pair{{vertex(tail, "v1")}, {}, {vertex(tail, "v2")}, {}};
  auto w = complete_subgraph_pair(tail, pair, 4);
  CHECK(vertex_names(tail, w.part1) == Names{"v1"});
  CHECK(vertex_names(tail, w.part2) == Names{"v2", "v3"});
  CHECK(w.crossing_count == 4);

  auto pendant = fixture("fs6_pendant");
  SubgraphPair p{{vertex(pendant, "v1")}, {}, {vertex(pendant, "v2")}, {}};
  auto wp = complete_subgraph_pair(pendant, p, 6);
  CHECK(vertex_names(pendant, wp.part1) == Names{"p1", "p2", "v1"});
  CHECK(vertex_names(pendant, wp.part2) == Names{"v2"});
  CHECK(check_fs_witness(pendant, wp).empty());
}

TEST_CASE("subgraph completion preconditions") {
  auto tail = fixture("fs4tail");
  auto v1 = vertex(tail, "v1");
  auto v2 = vertex(tail, "v2");
  auto v3 = vertex(tail, "v3");
  CHECK_THROWS_WITH_AS(complete_subgraph_pair(tail, {{v1}, {}, {v1}, {}}, 2), "subgraphs are not disjoint", InputError);
  CHECK_THROWS_AS(complete_subgraph_pair(tail, {{v1}, {}, {v2}, {}}, 6), InputError);
  CHECK_THROWS_AS(complete_subgraph_pair(tail, {{v1}, {}, {v2, v3}, {}}, 4), InputError);
  CHECK_THROWS_AS(complete_subgraph_pair(tail, {{v1}, {}, {}, {}}, 2), InputError);
  CHECK_NOTHROW(complete_subgraph_pair(tail, {{v1}, {}, {v2, v3}, {edge(tail, "c")}}, 4));

  auto banana = fixture("boldbanana");
  CHECK_THROWS_WITH_AS(complete_subgraph_pair(banana, {{0}, {}, {1}, {}}, 2), "subgraphs are joined by a bold path",
                       InputError);

  auto square = fixture("square");
  CHECK_THROWS_WITH_AS(complete_subgraph_pair(square, {{vertex(square, "u1")}, {}, {vertex(square, "u2")}, {}}, 2),
                       "subgraph is not equivariant", InputError);
}

TEST_CASE("completion recovers every bipartition from its two parts") {
  GenSpec spec;
  spec.max_fixed_vertices = 3;
  spec.max_edge_orbits = 4;
  spec.dedup = true;
  for_each_graph(spec, [](const EquivariantGraph& g) {
    for (const auto& w : fs_bipartitions(g)) {
      SubgraphPair pair{w.part1, induced_edges(g, w.part1), w.part2, induced_edges(g, w.part2)};
      auto done = complete_subgraph_pair(g, pair, 2);
      CHECK(done.part1 == w.part1);
      CHECK(done.crossing_count == w.crossing_count);
    }
  });
}

TEST_CASE("component genera") {
  CHECK(fs_component_genera(5, 2) == std::vector<std::pair<int, int>>{{0, 4}, {1, 3}, {2, 2}});
  CHECK(fs_component_genera(2, 2) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(fs_component_genera(1, 2) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK_THROWS_AS(fs_component_genera(5, 1), InputError);
  CHECK_THROWS_AS(fs_component_genera(2, 4), InputError);
  for (int g = 2; g <= 20; ++g) {
    for (int n = 2; n <= g; ++n) {
      auto parts = fs_component_genera(g, n);
      CHECK(parts.size() == static_cast<std::size_t>((g - n + 1) / 2 + 1));
      for (auto [a, b] : parts) {
        CHECK(a <= b);
        CHECK(a + b + n - 1 == g);
      }
    }
  }
}
