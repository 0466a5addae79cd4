#ifndef QCDHOPF_SUBGRAPH_HPP
#define QCDHOPF_SUBGRAPH_HPP

// Divergent subgraphs and contraction.
//
// A subgraph is a set of internal edges together with their endpoints; the
// remaining half-edges at those vertices are its external legs.  A union is
// admissible when every connected component is 1PI with residue in R and
// the union is a proper subset of the graph.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace qcdhopf {

struct SubgraphComponent {
  std::vector<int> edges;     // indices into the parent's edges
  std::vector<int> vertices;  // sorted parent vertex ids
  Residue residue;            // residue of the unbulleted component
  int loops = 0;
};

/// A proper divergent union, components ordered by smallest edge index.
struct SubgraphUnion {
  std::vector<SubgraphComponent> components;
  int loops() const {
    int s = 0;
    for (const auto& c : components) s += c.loops;
    return s;
  }
};

/// Per-component choice for quark two-point components: contract to an edge
/// or to a mass vertex (the bullet).  Ignored entries must be Edge.
enum class Decoration : std::uint8_t { Edge, Bullet };

namespace detail {

/// Extracts edge subset `edges` of g as a standalone graph; uncovered
/// half-edges at its vertices become external legs.
inline FeynGraph extract(const FeynGraph& g, const std::vector<int>& edges,
                         std::vector<int>* vertex_map = nullptr) {
  std::vector<int> local(g.num_vertices(), -1);
  std::vector<bool> used(g.num_edges(), false);
  FeynGraph s;
  auto touch = [&](int v) {
    if (local[v] < 0) {
      local[v] = s.num_vertices();
      s.vertices.push_back(g.vertices[v]);
    }
  };
  std::vector<int> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  std::vector<int> verts;
  for (int e : sorted_edges) {
    verts.push_back(g.edges[e].from);
    verts.push_back(g.edges[e].to);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts) touch(v);
  for (int e : sorted_edges) {
    used[e] = true;
    const auto& ed = g.edges[e];
    s.edges.push_back({ed.kind, local[ed.from], local[ed.to]});
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (used[e]) continue;
    const auto& ed = g.edges[e];
    Dir out_dir = ed.kind == EdgeKind::Gluon ? Dir::None : Dir::Out;
    Dir in_dir = ed.kind == EdgeKind::Gluon ? Dir::None : Dir::In;
    if (local[ed.from] >= 0) s.externals.push_back({ed.kind, out_dir, local[ed.from]});
    if (local[ed.to] >= 0) s.externals.push_back({ed.kind, in_dir, local[ed.to]});
  }
  for (const auto& x : g.externals) {
    if (local[x.at] >= 0) s.externals.push_back({x.kind, x.dir, local[x.at]});
  }
  if (vertex_map) *vertex_map = std::move(local);
  return s;
}

}  // namespace detail

/// The component of g spanned by `edges` as a standalone graph.
inline FeynGraph component_graph(const FeynGraph& g, const SubgraphComponent& c,
                                 Decoration d = Decoration::Edge) {
  FeynGraph s = detail::extract(g, c.edges);
  s.bullet = d == Decoration::Bullet;
  return s;
}

/// Which edge subsets count as subgraphs.  AnyEdgeSubset (the default)
/// accepts every edge subset with admissible components; Full additionally
/// requires a component to contain every internal edge joining two of its
/// vertices, which removes e.g. a quark loop with one of two rungs as a
/// four-gluon subgraph.  Only AnyEdgeSubset is compatible with the
/// coproduct formula on Green's functions.
enum class SubgraphPolicy : std::uint8_t { AnyEdgeSubset, Full };

/// All proper, nonempty, vertex-disjoint unions of 1PI subgraphs of g whose
/// components have residue in R.
inline std::vector<SubgraphUnion> divergent_subgraph_unions(
    const FeynGraph& g, SubgraphPolicy policy = SubgraphPolicy::AnyEdgeSubset) {
  const int ne = g.num_edges();
  if (ne > 30) throw std::length_error("graph too large for subgraph scan");
  std::vector<SubgraphUnion> out;
  const std::uint32_t full = ne == 32 ? ~0u : ((1u << ne) - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    // Split the edge subset into connected components over its endpoints.
    std::vector<int> parent(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    for (int e = 0; e < ne; ++e) {
      if (!(mask >> e & 1u)) continue;
      int a = detail::find_root(parent, g.edges[e].from);
      int b = detail::find_root(parent, g.edges[e].to);
      if (a != b) parent[a] = b;
    }
    std::vector<std::pair<int, std::vector<int>>> groups;  // root, edges
    for (int e = 0; e < ne; ++e) {
      if (!(mask >> e & 1u)) continue;
      int r = detail::find_root(parent, g.edges[e].from);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [r](const auto& p) { return p.first == r; });
      if (it == groups.end()) groups.push_back({r, {e}});
      else it->second.push_back(e);
    }
    bool ok = true;
    if (policy == SubgraphPolicy::Full) {
      std::vector<bool> touched(g.num_vertices(), false);
      for (int e = 0; e < ne; ++e) {
        if (mask >> e & 1u) touched[g.edges[e].from] = touched[g.edges[e].to] = true;
      }
      for (int e = 0; e < ne && ok; ++e) {
        if (mask >> e & 1u) continue;
        int a = g.edges[e].from, b = g.edges[e].to;
        if (touched[a] && touched[b] &&
            detail::find_root(parent, a) == detail::find_root(parent, b)) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    SubgraphUnion u;
    for (auto& [root, edges] : groups) {
      std::vector<int> vmap;
      FeynGraph s = detail::extract(g, edges, &vmap);
      if (!is_one_particle_irreducible(s)) {
        ok = false;
        break;
      }
      auto r = try_residue(s);
      if (!r) {
        ok = false;
        break;
      }
      SubgraphComponent c;
      c.edges = edges;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (vmap[v] >= 0) c.vertices.push_back(v);
      }
      c.residue = *r;
      c.loops = loop_number(s);
      u.components.push_back(std::move(c));
    }
    if (ok) out.push_back(std::move(u));
  }
  return out;
}

/// Γ/γ: each component shrinks to its residue vertex, or to a single line
/// for two-point residues.  `decorations` (empty or one entry per component)
/// selects the bullet for quark two-point components.
inline FeynGraph contract(const FeynGraph& g, const SubgraphUnion& u,
                          const std::vector<Decoration>& decorations = {}) {
  if (!decorations.empty() && decorations.size() != u.components.size()) {
    throw GraphError("decoration list does not match the components");
  }
  // New vertex ids: surviving vertices first, then one per component.
  const int nc = static_cast<int>(u.components.size());
  std::vector<int> owner(g.num_vertices(), -1);
  std::vector<bool> in_union(g.num_edges(), false);
  for (int c = 0; c < nc; ++c) {
    for (int v : u.components[c].vertices) owner[v] = c;
    for (int e : u.components[c].edges) in_union[e] = true;
  }
  FeynGraph q;
  q.bullet = g.bullet;
  std::vector<int> vnew(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (owner[v] < 0) {
      vnew[v] = q.num_vertices();
      q.vertices.push_back(g.vertices[v]);
    }
  }
  // Components contracting to a line become a temporary two-valent vertex
  // that is spliced out afterwards.
  std::vector<int> comp_vertex(nc);
  std::vector<int> splice;
  for (int c = 0; c < nc; ++c) {
    Decoration d = decorations.empty() ? Decoration::Edge : decorations[c];
    const Residue& r = u.components[c].residue;
    bool quark2 = std::holds_alternative<EdgeKind>(r) &&
                  std::get<EdgeKind>(r) == EdgeKind::Quark;
    if (d == Decoration::Bullet && !quark2) {
      throw GraphError("bullet decoration on a non-quark-two-point component");
    }
    comp_vertex[c] = q.num_vertices();
    if (std::holds_alternative<VertexKind>(r)) {
      q.vertices.push_back(std::get<VertexKind>(r));
    } else if (d == Decoration::Bullet) {
      q.vertices.push_back(VertexKind::V5);
    } else {
      q.vertices.push_back(VertexKind::V5);  // placeholder, spliced below
      splice.push_back(comp_vertex[c]);
    }
  }
  auto map = [&](int v) { return owner[v] < 0 ? vnew[v] : comp_vertex[owner[v]]; };
  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_union[e]) continue;
    const auto& ed = g.edges[e];
    Edge n{ed.kind, map(ed.from), map(ed.to)};
    q.edges.push_back(n);
  }
  for (const auto& x : g.externals) q.externals.push_back({x.kind, x.dir, map(x.at)});

  // Splice out placeholder vertices, highest id first so ids stay valid.
  std::sort(splice.rbegin(), splice.rend());
  for (int p : splice) {
    std::vector<int> inc_edges;
    std::vector<int> inc_ext;
    for (int e = 0; e < q.num_edges(); ++e) {
      if (q.edges[e].from == p || q.edges[e].to == p) inc_edges.push_back(e);
    }
    for (int k = 0; k < static_cast<int>(q.externals.size()); ++k) {
      if (q.externals[k].at == p) inc_ext.push_back(k);
    }
    if (inc_edges.size() == 2) {
      Edge& a = q.edges[inc_edges[0]];
      Edge& b = q.edges[inc_edges[1]];
      if (a.from == p && a.to == p) throw GraphError("contraction leaves a vacuum loop");
      Edge merged{a.kind, 0, 0};
      if (a.kind == EdgeKind::Gluon) {
        merged.from = a.from == p ? a.to : a.from;
        merged.to = b.from == p ? b.to : b.from;
      } else if (a.to == p) {
        merged.from = a.from;
        merged.to = b.to;
      } else {
        merged.from = b.from;
        merged.to = a.to;
      }
      a = merged;
      q.edges.erase(q.edges.begin() + inc_edges[1]);
    } else if (inc_edges.size() == 1 && inc_ext.size() == 1) {
      const Edge ed = q.edges[inc_edges[0]];
      int far = ed.from == p ? ed.to : ed.from;
      Dir d = Dir::None;
      if (ed.kind != EdgeKind::Gluon) d = ed.from == far ? Dir::Out : Dir::In;
      q.externals[inc_ext[0]] = {ed.kind, d, far};
      q.edges.erase(q.edges.begin() + inc_edges[0]);
    } else {
      throw GraphError("cannot contract a subgraph covering the whole graph");
    }
    q.vertices.erase(q.vertices.begin() + p);
    for (auto& e : q.edges) {
      if (e.from > p) --e.from;
      if (e.to > p) --e.to;
    }
    for (auto& x : q.externals) {
      if (x.at > p) --x.at;
    }
  }
  for (auto& e : q.edges) {
    if (e.kind == EdgeKind::Gluon && e.from > e.to) std::swap(e.from, e.to);
  }
  return q;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_SUBGRAPH_HPP
