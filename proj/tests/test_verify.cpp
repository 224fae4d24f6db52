#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "prymlocus/error.hpp"
#include "prymlocus/verify.hpp"
#include "test_support.hpp"

using namespace prym;
using prym::testing::fixture;

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t line_count(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("prymlocus_test_verify_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

GenSpec tiny_spec() {
  GenSpec spec;
  spec.max_edge_orbits = 3;
  return spec;
}

}  // namespace

TEST_CASE("single fixed vertex enumerates its loop configurations") {
  GenSpec spec;
  spec.max_fixed_vertices = 1;
  spec.max_vertex_pairs = 0;
  spec.max_edge_orbits = 2;
  // Fixed loops and exchanged loop pairs, at most two orbits in total.
  CHECK(enumerate_graphs(spec).size() == 6);
  spec.allow_loops = false;
  CHECK(enumerate_graphs(spec).size() == 1);
  spec.max_fixed_vertices = 0;
  CHECK(enumerate_graphs(spec).empty());
}

TEST_CASE("enumeration is valid, ordered and deterministic") {
  auto first = enumerate_graphs(tiny_spec());
  auto second = enumerate_graphs(tiny_spec());
  REQUIRE(first.size() == second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(encode_graph(first[k]) == encode_graph(second[k]));
    CHECK(validate(first[k]).ok);
  }
}

TEST_CASE("enumeration covers the fixture shapes") {
  GenSpec spec;
  spec.max_fixed_vertices = 3;
  spec.max_vertex_pairs = 2;
  spec.max_edge_orbits = 3;
  spec.dedup = true;
  std::set<std::string> keys;
  for_each_graph(spec, [&](const EquivariantGraph& g) { CHECK(keys.insert(canonical_key(g)).second); });
  for (const char* name : {"fs2", "fs4", "boldbanana", "fs4tail", "square", "fs6"}) {
    CAPTURE(name);
    CHECK(keys.count(canonical_key(fixture(name))) == 1);
  }
  CHECK(keys.count(canonical_key(fixture("fs6_pendant"))) == 0);
}

TEST_CASE("dedup keeps one graph per class") {
  GenSpec spec = tiny_spec();
  std::set<std::string> all_keys;
  std::size_t all = 0;
  for_each_graph(spec, [&](const EquivariantGraph& g) {
    all_keys.insert(canonical_key(g));
    ++all;
  });
  spec.dedup = true;
  std::set<std::string> dedup_keys;
  std::size_t dedup = 0;
  for_each_graph(spec, [&](const EquivariantGraph& g) {
    dedup_keys.insert(canonical_key(g));
    ++dedup;
  });
  CHECK(dedup == dedup_keys.size());
  CHECK(dedup_keys == all_keys);
  CHECK(dedup < all);
}

TEST_CASE("canonical_key and verdicts are invariant under relabeling") {
  for (const auto& g : enumerate_graphs(tiny_spec())) {
    auto base = check_graph(g);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto h = relabel(g, seed);
      CHECK(canonical_key(h) == canonical_key(g));
      auto rec = check_graph(h);
      CHECK(rec.star == base.star);
      CHECK(rec.starstar == base.starstar);
      CHECK(rec.fs2 == base.fs2);
      CHECK(rec.fs4 == base.fs4);
      CHECK(rec.d == base.d);
    }
  }
}

TEST_CASE("check_graph on the fixtures") {
  for (const char* name : {"fs2", "fs4", "boldbanana", "square", "fs4tail", "fs6", "fs6_pendant"}) {
    CAPTURE(name);
    auto rec = check_graph(fixture(name));
    CHECK(rec.failed_checks().empty());
    CHECK(rec.checks.size() == 18);
  }
  auto fs2 = check_graph(fixture("fs2"));
  CHECK(fs2.d == 1);
  CHECK(fs2.star);
  CHECK_FALSE(fs2.starstar);
  CHECK(fs2.fs2);
  CHECK_FALSE(fs2.fs4);
  CHECK(fs2.has_type2);

  auto fs4 = check_graph(fixture("fs4"));
  CHECK_FALSE(fs4.star);
  CHECK(fs4.fs4);
  CHECK_FALSE(fs4.has_type2);

  auto banana = check_graph(fixture("boldbanana"));
  CHECK(banana.star);
  CHECK(banana.starstar);
  CHECK_FALSE(banana.fs2);

  CHECK_THROWS_AS(check_graph(fixture("type2_node")), InputError);
}

TEST_CASE("mutant STARSTAR rows are caught") {
  auto rec = check_graph(fixture("fs2"), CheckOptions{4, 1'000'000, true});
  CHECK_FALSE(rec.failed_checks().empty());
}

TEST_CASE("GenSpec bounds") {
  GenSpec spec;
  spec.max_fixed_vertices = 7;
  CHECK_THROWS_AS(spec.check(), CapExceeded);
  spec.max_fixed_vertices = -1;
  CHECK_THROWS_AS(spec.check(), InputError);
  spec = GenSpec{};
  spec.max_edge_orbits = 13;
  CHECK_THROWS_AS(enumerate_graphs(spec), CapExceeded);
  CHECK(GenSpec{}.to_json()["max_edge_orbits"] == 4);
}

TEST_CASE("run_suite writes reproducible reports") {
  auto dir = scratch_dir("suite");
  auto a = SuitePaths::from_prefix((dir / "a.ndjson").string());
  auto b = SuitePaths::from_prefix((dir / "b.ndjson").string());
  auto report_a = run_suite(tiny_spec(), a);
  auto report_b = run_suite(tiny_spec(), b);
  CHECK(report_a.success());
  CHECK(report_a.graphs == enumerate_graphs(tiny_spec()).size());
  CHECK(slurp(a.report) == slurp(b.report));
  CHECK(slurp(a.summary) == slurp(b.summary));
  CHECK(line_count(slurp(a.report)) == report_a.graphs);
  CHECK(slurp(a.counterexamples).empty());

  auto summary = nlohmann::json::parse(slurp(a.summary));
  CHECK(summary["schema_version"] == 1);
  CHECK(summary["success"] == true);
  CHECK(summary["graphs"] == report_a.graphs);
  CHECK(summary["checks"]["theorem1"]["fail"] == 0);
  CHECK(summary["checks"]["theorem1"]["pass"] == report_a.graphs);

  auto first = nlohmann::json::parse(slurp(a.report).substr(0, slurp(a.report).find('\n')));
  CHECK(first.contains("graph"));
  CHECK(first["checks"].size() == 18);
  fs::remove_all(dir);
}

TEST_CASE("run_suite on an empty range and with the mutant") {
  auto dir = scratch_dir("edge");
  GenSpec empty;
  empty.max_fixed_vertices = 0;
  empty.max_vertex_pairs = 0;
  auto paths = SuitePaths::from_prefix((dir / "empty.ndjson").string());
  auto report = run_suite(empty, paths);
  CHECK(report.graphs == 0);
  CHECK(report.success());
  CHECK(slurp(paths.report).empty());

  auto mutant_paths = SuitePaths::from_prefix((dir / "mutant.ndjson").string());
  auto mutant = run_suite(tiny_spec(), mutant_paths, CheckOptions{4, 1'000'000, true});
  CHECK_FALSE(mutant.success());
  CHECK(line_count(slurp(mutant_paths.counterexamples)) == mutant.failed_graphs);
  auto doc = nlohmann::json::parse(slurp(mutant_paths.counterexamples).substr(0, slurp(mutant_paths.counterexamples).find('\n')));
  CHECK(doc.contains("failed_checks"));
  CHECK(doc.contains("involution"));

  CHECK_THROWS_AS(run_suite(tiny_spec(), SuitePaths::from_prefix((dir / "missing" / "x.ndjson").string())),
                  InputError);
  fs::remove_all(dir);
}
