#include "prymlocus/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "prymlocus/error.hpp"

namespace prym {

namespace {

template <typename Entry>
std::map<std::string, std::size_t> index_ids(const std::vector<Entry>& entries, const char* what) {
  std::map<std::string, std::size_t> index;
  for (const auto& entry : entries) {
    if (entry.id.empty()) throw InputError(std::string("empty ") + what + " id");
    if (!index.emplace(entry.id, 0).second) {
      throw InputError(std::string("duplicate ") + what + " id '" + entry.id + "'");
    }
  }
  std::size_t next = 0;
  for (auto& [id, idx] : index) idx = next++;
  return index;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& id,
                   const std::string& context) {
  auto it = index.find(id);
  if (it == index.end()) throw InputError("dangling reference '" + id + "' in " + context);
  return it->second;
}

std::vector<std::size_t> build_map(const std::map<std::string, std::size_t>& index,
                                   const std::vector<std::pair<std::string, std::string>>& pairs,
                                   const char* what) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(index.size(), kUnset);
  for (const auto& [from, to] : pairs) {
    std::size_t a = lookup(index, from, std::string("involution.") + what);
    std::size_t b = lookup(index, to, std::string("involution.") + what);
    if (map[a] != kUnset) throw InputError(std::string("involution.") + what + " maps '" + from + "' twice");
    map[a] = b;
  }
  for (const auto& [id, idx] : index) {
    if (map[idx] == kUnset) {
      throw InputError(std::string("involution.") + what + " is not total: missing '" + id + "'");
    }
  }
  return map;
}

}  // namespace

EquivariantGraph EquivariantGraph::from_document(const GraphDocument& doc) {
  auto vindex = index_ids(doc.vertices, "vertex");
  auto eindex = index_ids(doc.edges, "edge");

  EquivariantGraph g;
  g.vertices_.resize(vindex.size());
  for (const auto& v : doc.vertices) {
    if (v.genus && *v.genus < 0) throw InputError("negative genus on vertex '" + v.id + "'");
    g.vertices_[vindex.at(v.id)] = Vertex{v.id, v.genus};
  }
  g.edges_.resize(eindex.size());
  for (const auto& e : doc.edges) {
    g.edges_[eindex.at(e.id)] = OrientedEdge{e.id, lookup(vindex, e.from, "edge '" + e.id + "'"),
                                             lookup(vindex, e.to, "edge '" + e.id + "'")};
  }
  g.involution_.vertex_map = build_map(vindex, doc.vertex_map, "vertices");
  g.involution_.edge_map = build_map(eindex, doc.edge_map, "edges");
  return g;
}

GraphDocument EquivariantGraph::to_document() const {
  GraphDocument doc;
  for (const auto& v : vertices_) doc.vertices.push_back({v.id, v.genus});
  for (const auto& e : edges_) doc.edges.push_back({e.id, vertices_[e.tail].id, vertices_[e.head].id});
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    doc.vertex_map.emplace_back(vertices_[v].id, vertices_[involution_.vertex_map[v]].id);
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    doc.edge_map.emplace_back(edges_[e].id, edges_[involution_.edge_map[e]].id);
  }
  return doc;
}

std::optional<VertexIndex> EquivariantGraph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, std::string_view key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<EdgeIndex> EquivariantGraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const OrientedEdge& e, std::string_view key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

bool EquivariantGraph::orientation_compatible() const {
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const auto& image = edges_[edge_image(e)];
    if (image.tail != vertex_image(edges_[e].tail) || image.head != vertex_image(edges_[e].head)) {
      return false;
    }
  }
  return true;
}

EquivariantGraph EquivariantGraph::with_orientation(
    const std::vector<std::pair<VertexIndex, VertexIndex>>& ends, bool oriented) const {
  EquivariantGraph g = *this;
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    g.edges_[e].tail = ends[e].first;
    g.edges_[e].head = ends[e].second;
  }
  g.oriented_ = oriented;
  return g;
}

EquivariantGraph EquivariantGraph::without_edges(const std::vector<bool>& remove) const {
  EquivariantGraph g;
  g.vertices_ = vertices_;
  g.involution_.vertex_map = involution_.vertex_map;
  g.oriented_ = oriented_;
  std::vector<EdgeIndex> renumber(edges_.size(), 0);
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    if (remove[e]) continue;
    if (remove[edge_image(e)]) throw InputError("edge removal must be closed under the involution");
    renumber[e] = g.edges_.size();
    g.edges_.push_back(edges_[e]);
  }
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    if (!remove[e]) g.involution_.edge_map.push_back(renumber[edge_image(e)]);
  }
  return g;
}

bool EquivariantGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const OrientedEdge& e) { return e.is_loop(); });
}

GraphDocument document_from_json(const nlohmann::json& j) {
  using nlohmann::json;
  auto require = [](bool cond, const std::string& what) {
    if (!cond) throw InputError("malformed graph document: " + what);
  };
  require(j.is_object(), "top level must be an object");
  require(j.contains("vertices") && j["vertices"].is_array(), "\"vertices\" must be a list");
  require(j.contains("edges") && j["edges"].is_array(), "\"edges\" must be a list");
  require(j.contains("involution") && j["involution"].is_object(), "\"involution\" must be an object");

  GraphDocument doc;
  for (const auto& v : j["vertices"]) {
    require(v.is_object() && v.contains("id") && v["id"].is_string(), "vertex entries need a string \"id\"");
    GraphDocument::VertexEntry entry{v["id"].get<std::string>(), std::nullopt};
    if (v.contains("genus") && !v["genus"].is_null()) {
      require(v["genus"].is_number_integer(), "genus must be an integer");
      entry.genus = v["genus"].get<int>();
    }
    doc.vertices.push_back(std::move(entry));
  }
  for (const auto& e : j["edges"]) {
    require(e.is_object() && e.contains("id") && e["id"].is_string(), "edge entries need a string \"id\"");
    require(e.contains("from") && e["from"].is_string() && e.contains("to") && e["to"].is_string(),
            "edge '" + e["id"].get<std::string>() + "' needs string \"from\" and \"to\"");
    doc.edges.push_back({e["id"].get<std::string>(), e["from"].get<std::string>(), e["to"].get<std::string>()});
  }
  const auto& inv = j["involution"];
  for (const char* key : {"vertices", "edges"}) {
    require(inv.contains(key) && inv[key].is_object(), std::string("involution.") + key + " must be a map");
    auto& target = std::string(key) == "vertices" ? doc.vertex_map : doc.edge_map;
    for (const auto& [from, to] : inv[key].items()) {
      require(to.is_string(), std::string("involution.") + key + " values must be ids");
      target.emplace_back(from, to.get<std::string>());
    }
  }
  return doc;
}

nlohmann::json document_to_json(const GraphDocument& doc) {
  using nlohmann::json;
  json vertices = json::array();
  for (const auto& v : doc.vertices) {
    json entry = {{"id", v.id}};
    if (v.genus) entry["genus"] = *v.genus;
    vertices.push_back(std::move(entry));
  }
  json edges = json::array();
  for (const auto& e : doc.edges) edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}});
  json vmap = json::object();
  for (const auto& [a, b] : doc.vertex_map) vmap[a] = b;
  json emap = json::object();
  for (const auto& [a, b] : doc.edge_map) emap[a] = b;
  return {{"vertices", vertices}, {"edges", edges}, {"involution", {{"vertices", vmap}, {"edges", emap}}}};
}

EquivariantGraph parse_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
  return EquivariantGraph::from_document(document_from_json(j));
}

EquivariantGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

nlohmann::json graph_to_json(const EquivariantGraph& g) { return document_to_json(g.to_document()); }

std::string encode_graph(const EquivariantGraph& g) { return graph_to_json(g).dump(); }

std::vector<std::vector<VertexIndex>> induced_components(const EquivariantGraph& g,
                                                         const std::vector<bool>& in_set) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexIndex>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.is_loop() || !in_set[e.tail] || !in_set[e.head]) continue;
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexIndex>> components;
  for (VertexIndex start = 0; start < n; ++start) {
    if (!in_set[start] || seen[start]) continue;
    std::vector<VertexIndex> comp;
    std::queue<VertexIndex> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      VertexIndex v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (VertexIndex w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

ValidationReport validate(const EquivariantGraph& g) {
  ValidationReport report;
  const auto& vmap = g.involution().vertex_map;
  const auto& emap = g.involution().edge_map;
  auto add = [&](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };

  if (g.vertex_count() == 0) add("empty-graph", "graph must have at least one vertex");

  bool involutive = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (vmap[vmap[v]] != v) {
      involutive = false;
      add("vertex-map-not-involution",
          "vertex map is not an involution at '" + g.vertices()[v].id + "'");
    }
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (emap[emap[e]] != e) {
      involutive = false;
      add("edge-map-not-involution", "edge map is not an involution at '" + g.edges()[e].id + "'");
    }
  }

  if (involutive) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      const auto& image = g.edges()[emap[e]];
      std::multiset<VertexIndex> expected{vmap[edge.tail], vmap[edge.head]};
      std::multiset<VertexIndex> actual{image.tail, image.head};
      if (expected != actual) {
        add("incidence", "edge map does not respect incidence at '" + edge.id + "'");
        continue;
      }
      if (emap[e] == e && (!g.is_fixed_vertex(edge.tail) || !g.is_fixed_vertex(edge.head))) {
        add("type-2-node", "type-2 node unsupported: fixed edge '" + edge.id +
                               "' joins vertices exchanged by the involution");
      }
    }
  }

  if (g.vertex_count() > 0) {
    std::vector<bool> all(g.vertex_count(), true);
    if (induced_components(g, all).size() != 1) add("disconnected", "graph must be connected");
  }

  report.ok = report.violations.empty();
  if (!report.ok) return report;

  int moved_vertices = 0;
  int moved_edges = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_fixed_vertex(v)) {
      report.bold_vertices.push_back(v);
    } else {
      ++moved_vertices;
    }
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_fixed_edge(e)) {
      report.bold_edges.push_back(e);
    } else {
      ++moved_edges;
    }
  }
  report.n_e = moved_edges / 2;
  report.c_e = moved_vertices / 2;
  return report;
}

void require_valid(const EquivariantGraph& g) {
  auto report = validate(g);
  if (report.ok) return;
  std::string message = "invalid graph:";
  for (const auto& v : report.violations) message += "\n  [" + v.code + "] " + v.message;
  throw InputError(message);
}

EquivariantGraph auto_orient(const EquivariantGraph& g) {
  require_valid(g);
  std::vector<std::pair<VertexIndex, VertexIndex>> ends;
  ends.reserve(g.edge_count());
  for (const auto& e : g.edges()) ends.emplace_back(e.tail, e.head);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    EdgeIndex partner = g.edge_image(e);
    if (partner <= e) continue;
    ends[partner] = {g.vertex_image(ends[e].first), g.vertex_image(ends[e].second)};
  }
  return g.with_orientation(ends, true);
}

BoldSubgraph bold_subgraph(const EquivariantGraph& g) {
  BoldSubgraph bold;
  std::vector<bool> fixed(g.vertex_count(), false);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_fixed_vertex(v)) {
      fixed[v] = true;
      bold.vertices.push_back(v);
    }
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_fixed_edge(e)) bold.edges.push_back(e);
  }

  // Components are taken over bold edges only, not every edge between bold vertices.
  std::vector<VertexIndex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexIndex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeIndex e : bold.edges) {
    auto a = find(g.edges()[e].tail);
    auto b = find(g.edges()[e].head);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexIndex, std::vector<VertexIndex>> groups;
  for (VertexIndex v : bold.vertices) groups[find(v)].push_back(v);
  for (auto& [root, members] : groups) bold.components.push_back(std::move(members));
  return bold;
}

int arithmetic_genus(const EquivariantGraph& g) {
  int total = 0;
  for (const auto& v : g.vertices()) {
    if (!v.genus) throw InputError("vertex '" + v.id + "' has no genus label");
    total += *v.genus;
  }
  return total + static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

}  // namespace prym
