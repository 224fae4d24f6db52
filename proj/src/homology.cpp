#include "prymlocus/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "prymlocus/error.hpp"

namespace prym {

CycleBasis fundamental_cycles(const EquivariantGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto& edges = g.edges();

  std::vector<std::vector<EdgeIndex>> incident(n);
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (edges[e].is_loop()) continue;
    incident[edges[e].tail].push_back(e);
    incident[edges[e].head].push_back(e);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<EdgeIndex> parent_edge(n, kNone);
  std::vector<VertexIndex> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> in_tree(edges.size(), false);

  for (VertexIndex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<VertexIndex> queue;
    queue.push(root);
    while (!queue.empty()) {
      VertexIndex v = queue.front();
      queue.pop();
      for (EdgeIndex e : incident[v]) {
        VertexIndex w = edges[e].tail == v ? edges[e].head : edges[e].tail;
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        in_tree[e] = true;
        queue.push(w);
      }
    }
  }

  CycleBasis basis;
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (in_tree[e]) basis.tree_edges.push_back(e);
  }
  for (EdgeIndex chord = 0; chord < edges.size(); ++chord) {
    if (in_tree[chord]) continue;
    Chain c{IntRow(edges.size(), 0)};
    c.coords[chord] = 2;
    // Close the cycle with the tree path head(chord) -> tail(chord).
    VertexIndex a = edges[chord].head;
    VertexIndex b = edges[chord].tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        EdgeIndex e = parent_edge[a];
        c.coords[e] += edges[e].tail == a ? 2 : -2;  // walking a -> parent
        a = parent[a];
      } else {
        EdgeIndex e = parent_edge[b];
        c.coords[e] += edges[e].head == b ? 2 : -2;  // walking parent -> b
        b = parent[b];
      }
    }
    basis.chains.push_back(std::move(c));
  }
  return basis;
}

IntRow boundary(const EquivariantGraph& g, const Chain& c) {
  IntRow out(g.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out[g.edges()[e].head] += c.coords[e];
    out[g.edges()[e].tail] -= c.coords[e];
  }
  return out;
}

Chain involution_on_chain(const EquivariantGraph& g, const Chain& c) {
  Chain out{IntRow(c.coords.size(), 0)};
  for (EdgeIndex e = 0; e < c.coords.size(); ++e) out.coords[g.edge_image(e)] = c.coords[e];
  return out;
}

IntMatrix AntiInvariantLattice::basis_matrix() const {
  IntMatrix m;
  for (const auto& row : basis) m.push_back(row.coords);
  return m;
}

AntiInvariantLattice anti_invariant_lattice_of(const EquivariantGraph& g) {
  if (!g.orientation_compatible()) {
    throw InputError("anti-invariant lattice needs an involution-compatible orientation");
  }
  IntMatrix generators;
  for (const auto& omega : fundamental_cycles(g).chains) {
    Chain image = involution_on_chain(g, omega);
    IntRow row(g.edge_count());
    // (omega - i(omega)) / 2 in doubled units is the true-unit difference.
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) row[e] = (omega.coords[e] - image.coords[e]) / 2;
    generators.push_back(std::move(row));
  }

  AntiInvariantLattice lat;
  for (auto& row : hermite_normal_form(std::move(generators))) lat.basis.push_back(Chain{std::move(row)});
  lat.rank = lat.basis.size();
  lat.edge_gcds.assign(g.edge_count(), 0);
  for (const auto& row : lat.basis) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) lat.edge_gcds[e] = std::gcd(lat.edge_gcds[e], row.coords[e]);
  }
  return lat;
}

AntiInvariantLattice anti_invariant_lattice(const EquivariantGraph& g) {
  require_valid(g);
  return anti_invariant_lattice_of(g);
}

int rank_formula(const EquivariantGraph& g) {
  auto report = validate(g);
  if (!report.ok) throw InputError("rank formula needs a valid connected graph");
  return report.n_e - report.c_e;
}

std::vector<EdgeClass> classify_edges(const AntiInvariantLattice& lat, const EquivariantGraph& g) {
  std::vector<EdgeClass> classes;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (orbit_rep(g, e) != e) continue;
    EdgeClass cls;
    cls.orbit_rep = e;
    cls.partner = g.edge_image(e);
    cls.gcd = lat.edge_gcds[e];
    if (lat.edge_gcds[cls.partner] != cls.gcd) {
      throw InvariantViolation("orbit of edge '" + g.edges()[e].id + "' has unequal gcds on its members");
    }
    switch (cls.gcd) {
      case 0:
        cls.type = EdgeType::kVanishing;
        cls.multiplier = 0;
        break;
      case 2:
        cls.type = EdgeType::kIntegral;
        cls.multiplier = 1;
        break;
      case 1:
        cls.type = EdgeType::kHalfIntegral;
        cls.multiplier = 2;
        break;
      default:
        throw InvariantViolation("edge '" + g.edges()[e].id + "' has functional gcd " + std::to_string(cls.gcd) +
                                 " outside {0, 1, 2}");
    }
    for (const auto& row : lat.basis) cls.basis_values.push_back(row.coords[e]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

struct Arc {
  EdgeIndex edge;
  VertexIndex to;
  Int sign;  // +1 when traversed tail -> head
};

class CycleEnumerator {
 public:
  CycleEnumerator(const EquivariantGraph& g, std::size_t cap)
      : g_(g), cap_(cap), adj_(g.vertex_count()), on_path_(g.vertex_count(), false) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      if (edge.is_loop()) continue;
      adj_[edge.tail].push_back({e, edge.head, +1});
      adj_[edge.head].push_back({e, edge.tail, -1});
    }
  }

  std::vector<Chain> run() {
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
      if (!g_.edges()[e].is_loop()) continue;
      Chain c{IntRow(g_.edge_count(), 0)};
      c.coords[e] = 2;
      emit(std::move(c));
    }
    for (VertexIndex s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
    return std::move(out_);
  }

 private:
  // Cycles are rooted at their smallest vertex. Each is found once per
  // direction; keep the direction whose first edge id is smaller than its last.
  void extend(VertexIndex v) {
    for (const Arc& arc : adj_[v]) {
      if (arc.to < start_) continue;
      if (!path_.empty() && arc.edge == path_.back().edge) continue;
      if (arc.to == start_) {
        if (path_.empty() || path_.front().edge >= arc.edge) continue;
        Chain c{IntRow(g_.edge_count(), 0)};
        for (const Arc& step : path_) c.coords[step.edge] = 2 * step.sign;
        c.coords[arc.edge] = 2 * arc.sign;
        emit(std::move(c));
        continue;
      }
      if (on_path_[arc.to]) continue;
      on_path_[arc.to] = true;
      path_.push_back(arc);
      extend(arc.to);
      path_.pop_back();
      on_path_[arc.to] = false;
    }
  }

  void emit(Chain c) {
    if (out_.size() >= cap_) {
      throw CapExceeded("simple cycle enumeration exceeded cap of " + std::to_string(cap_));
    }
    out_.push_back(std::move(c));
  }

  const EquivariantGraph& g_;
  std::size_t cap_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<bool> on_path_;
  std::vector<Arc> path_;
  VertexIndex start_ = 0;
  std::vector<Chain> out_;
};

}  // namespace

std::vector<Chain> simple_cycles(const EquivariantGraph& g, SimpleCycleOptions options) {
  return CycleEnumerator(g, options.cap).run();
}

EdgeType classify_edge_by_cycles(const EquivariantGraph& g, EdgeIndex edge, const std::vector<Chain>& cycles) {
  if (!g.orientation_compatible()) {
    throw InputError("cycle classification needs an involution-compatible orientation");
  }
  const EdgeIndex partner = g.edge_image(edge);
  bool nonzero_value = false;
  for (const auto& omega : cycles) {
    const Int here = omega.coords[edge] / 2;
    const Int there = omega.coords[partner] / 2;
    if (here == 0) continue;
    if (partner != edge && there == 0) return EdgeType::kHalfIntegral;
    // z_edge((omega - i omega)/2) = (mult_edge - mult_partner) / 2
    if (here != there) nonzero_value = true;
  }
  return nonzero_value ? EdgeType::kIntegral : EdgeType::kVanishing;
}

EdgeType classify_edge_by_cycles(const EquivariantGraph& g, EdgeIndex edge, SimpleCycleOptions options) {
  return classify_edge_by_cycles(g, edge, simple_cycles(g, options));
}

}  // namespace prym
