#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace prym {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Vertex {
  std::string id;
  std::optional<int> genus;
};

struct OrientedEdge {
  std::string id;
  VertexIndex tail = 0;
  VertexIndex head = 0;

  bool is_loop() const { return tail == head; }
};

// Involution stored as index maps; validate() checks that they are involutive
// and respect incidence.
struct Involution {
  std::vector<VertexIndex> vertex_map;
  std::vector<EdgeIndex> edge_map;
};

// String-keyed form of a graph, one-to-one with the JSON document format.
struct GraphDocument {
  struct VertexEntry {
    std::string id;
    std::optional<int> genus;
  };
  struct EdgeEntry {
    std::string id;
    std::string from;
    std::string to;
  };
  std::vector<VertexEntry> vertices;
  std::vector<EdgeEntry> edges;
  std::vector<std::pair<std::string, std::string>> vertex_map;
  std::vector<std::pair<std::string, std::string>> edge_map;
};

/// Connected multigraph with an involution on vertices and oriented edges:
/// the dual graph of a stable curve with involution.
///
/// Vertices and edges are stored sorted by id, so every index-based
/// computation downstream is deterministic and independent of the order in
/// which the document listed them. Instances are immutable.
class EquivariantGraph {
 public:
  EquivariantGraph() = default;

  /// Builds from a document. Throws InputError on duplicate ids, dangling
  /// references, or partial involution maps. Does not validate the
  /// involution axioms; see validate().
  static EquivariantGraph from_document(const GraphDocument& doc);

  GraphDocument to_document() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  const Involution& involution() const { return involution_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexIndex vertex_image(VertexIndex v) const { return involution_.vertex_map[v]; }
  EdgeIndex edge_image(EdgeIndex e) const { return involution_.edge_map[e]; }
  bool is_fixed_vertex(VertexIndex v) const { return vertex_image(v) == v; }
  bool is_fixed_edge(EdgeIndex e) const { return edge_image(e) == e; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  // True once auto_orient has normalized the orientation.
  bool oriented() const { return oriented_; }

  // i maps every oriented edge tail->head onto i(tail)->i(head).
  bool orientation_compatible() const;

  /// Same graph with edge orientations replaced; marks the result oriented.
  EquivariantGraph with_orientation(const std::vector<std::pair<VertexIndex, VertexIndex>>& ends,
                                    bool oriented) const;

  /// Subgraph keeping every vertex and dropping the flagged edges.
  /// Edge indices are renumbered; the removed set must be closed under i.
  EquivariantGraph without_edges(const std::vector<bool>& remove) const;

  bool has_loops() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<OrientedEdge> edges_;
  Involution involution_;
  bool oriented_ = false;
};

// Canonical orbit representative: the smaller index of {e, i(e)}.
inline EdgeIndex orbit_rep(const EquivariantGraph& g, EdgeIndex e) {
  return std::min(e, g.edge_image(e));
}

GraphDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const GraphDocument& doc);

/// Parses the JSON graph format. The result is unvalidated and unnormalized.
EquivariantGraph parse_graph(std::string_view text);
EquivariantGraph load_graph(const std::string& path);

/// Canonical serialization: entries sorted by id, compact, byte-stable.
nlohmann::json graph_to_json(const EquivariantGraph& g);
std::string encode_graph(const EquivariantGraph& g);

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  std::vector<VertexIndex> bold_vertices;
  std::vector<EdgeIndex> bold_edges;
  int n_e = 0;  // exchanged edge pairs
  int c_e = 0;  // exchanged vertex pairs
};

/// Checks every involution and connectivity invariant. Violations are
/// reported as data; this never throws.
ValidationReport validate(const EquivariantGraph& g);

/// Throws InputError listing every violation unless g is valid.
void require_valid(const EquivariantGraph& g);

/// Normalizes to an involution-compatible orientation. In each ordinary edge
/// orbit the lexicographically smaller id keeps its direction and its partner
/// becomes the image; fixed edges are untouched.
EquivariantGraph auto_orient(const EquivariantGraph& g);

struct BoldSubgraph {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;
  std::vector<std::vector<VertexIndex>> components;
};

/// Fixed vertices and fixed edges, with the connected components of B(G).
BoldSubgraph bold_subgraph(const EquivariantGraph& g);

/// Sum of component genera plus first Betti number. Throws InputError when
/// a vertex carries no genus label.
int arithmetic_genus(const EquivariantGraph& g);

/// Connected components of the subgraph induced on the flagged vertices,
/// using only edges with both endpoints flagged. Components are listed by
/// smallest vertex index, each sorted.
std::vector<std::vector<VertexIndex>> induced_components(const EquivariantGraph& g,
                                                         const std::vector<bool>& in_set);

}  // namespace prym
