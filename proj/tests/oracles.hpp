#ifndef QCDHOPF_TESTS_ORACLES_HPP
#define QCDHOPF_TESTS_ORACLES_HPP

// Independent reference computations for the test suite.  Nothing here calls
// the enumerator or the automorphism search of the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qcdhopf/qcdhopf.hpp"

namespace oracle {

using namespace qcdhopf;

// Half-edge types.  A quark edge joins a QOut half (where the quark leaves a
// vertex) to a QIn half (where it enters); ghosts likewise; gluons pair freely.
enum Half { QIn, QOut, GIn, GOut, Gl };

inline std::vector<Half> halves(VertexKind v) {
  switch (v) {
    case VertexKind::V1: return {QIn, QOut, Gl};
    case VertexKind::V2: return {GIn, GOut, Gl};
    case VertexKind::V3: return {Gl, Gl, Gl};
    case VertexKind::V4: return {Gl, Gl, Gl, Gl};
    case VertexKind::V5: return {QIn, QOut};
  }
  return {};
}

/// Permutations of a vertex's half-edges that preserve their types.
inline long half_symmetry(VertexKind v) {
  if (v == VertexKind::V3) return 6;
  if (v == VertexKind::V4) return 24;
  return 1;
}

struct Leg {
  EdgeKind kind;
  Dir dir;
};

/// External legs of a residue in the order quark-in, quark-out, ghost-in,
/// ghost-out, gluons.
inline std::vector<Leg> legs_of(const std::string& residue) {
  if (residue == "e1" || residue == "v5") return {{EdgeKind::Quark, Dir::In}, {EdgeKind::Quark, Dir::Out}};
  if (residue == "e2") return {{EdgeKind::Ghost, Dir::In}, {EdgeKind::Ghost, Dir::Out}};
  if (residue == "e3") return {{EdgeKind::Gluon, Dir::None}, {EdgeKind::Gluon, Dir::None}};
  if (residue == "v1") {
    return {{EdgeKind::Quark, Dir::In}, {EdgeKind::Quark, Dir::Out}, {EdgeKind::Gluon, Dir::None}};
  }
  if (residue == "v2") {
    return {{EdgeKind::Ghost, Dir::In}, {EdgeKind::Ghost, Dir::Out}, {EdgeKind::Gluon, Dir::None}};
  }
  if (residue == "v3") return std::vector<Leg>(3, {EdgeKind::Gluon, Dir::None});
  if (residue == "v4") return std::vector<Leg>(4, {EdgeKind::Gluon, Dir::None});
  return {};
}

/// The half-edge an external leg occupies at its vertex.
inline Half leg_half(const Leg& l) {
  if (l.kind == EdgeKind::Quark) return l.dir == Dir::In ? QIn : QOut;
  if (l.kind == EdgeKind::Ghost) return l.dir == Dir::In ? GIn : GOut;
  return Gl;
}

inline bool pairs(Half a, Half b) {
  return (a == QOut && b == QIn) || (a == QIn && b == QOut) || (a == GOut && b == GIn) ||
         (a == GIn && b == GOut) || (a == Gl && b == Gl);
}

inline int find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = find(p, p[x]); }

inline bool connected_without(int n, const std::vector<Edge>& edges, int skip) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  int comps = n;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (i == skip) continue;
    int a = find(p, edges[i].from), b = find(p, edges[i].to);
    if (a != b) p[a] = b, --comps;
  }
  return comps == 1;
}

struct WickClass {
  FeynGraph graph;
  long contractions = 0;
  long vertex_factor = 1;  // Π n_t! · Π half_symmetry
};

/// Vertex multisets (n1..n5) with the given loop number and external legs,
/// found by direct half-edge bookkeeping.
inline std::vector<std::array<int, 5>> vertex_sets(const std::vector<Leg>& legs, int loops, int max_v5) {
  std::vector<std::array<int, 5>> out;
  const int bound = 2 * loops + 4;
  for (int n1 = 0; n1 <= bound; ++n1)
    for (int n2 = 0; n2 <= bound; ++n2)
      for (int n3 = 0; n3 <= bound; ++n3)
        for (int n4 = 0; n4 <= bound; ++n4)
          for (int n5 = 0; n5 <= max_v5; ++n5) {
            std::array<int, 5> n{n1, n2, n3, n4, n5};
            int count[5] = {0, 0, 0, 0, 0};
            int V = 0;
            for (int j = 0; j < 5; ++j) {
              V += n[j];
              for (Half h : halves(static_cast<VertexKind>(j + 1))) count[h] += n[j];
            }
            if (V == 0) continue;
            int total = 0;
            for (int c : count) total += c;
            for (const Leg& l : legs) --count[leg_half(l)];
            total -= static_cast<int>(legs.size());
            if (std::any_of(count, count + 5, [](int c) { return c < 0; })) continue;
            if (count[QIn] != count[QOut] || count[GIn] != count[GOut] || count[Gl] % 2) continue;
            if (total / 2 - V + 1 != loops) continue;
            out.push_back(n);
          }
  return out;
}

/// All connected 1PI graphs from complete Wick contractions, grouped by
/// labeled canonical key, with the number of contractions giving each.
inline std::map<std::string, WickClass> wick_graphs(const std::string& residue, int loops, int max_v5) {
  const std::vector<Leg> legs = legs_of(residue);
  const bool bullet = residue == "v5";
  std::map<std::string, WickClass> out;
  for (const auto& n : vertex_sets(legs, loops, max_v5)) {
    std::vector<VertexKind> verts;
    long factor = 1;
    for (int j = 0; j < 5; ++j) {
      for (int c = 1; c <= n[j]; ++c) {
        verts.push_back(static_cast<VertexKind>(j + 1));
        factor *= c * half_symmetry(static_cast<VertexKind>(j + 1));
      }
    }
    // Half-edge slots (vertex, type); legs claim slots first, then the rest pair up.
    std::vector<std::pair<int, Half>> slots;
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
      for (Half h : halves(verts[v])) slots.emplace_back(v, h);
    }
    std::vector<bool> used(slots.size(), false);
    std::vector<External> ext(legs.size());
    std::vector<Edge> edges;

    std::function<void()> pair_rest = [&] {
      int first = -1;
      for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
        if (!used[i]) {
          first = i;
          break;
        }
      }
      if (first < 0) {
        FeynGraph g;
        g.vertices = verts;
        g.edges = edges;
        g.externals = ext;
        g.bullet = bullet;
        const int V = g.num_vertices();
        if (!connected_without(V, g.edges, -1)) return;
        for (int e = 0; e < g.num_edges(); ++e) {
          if (!connected_without(V, g.edges, e)) return;
        }
        std::string key = canonicalize(g).key;
        auto [it, fresh] = out.try_emplace(key);
        if (fresh) it->second.graph = g, it->second.vertex_factor = factor;
        ++it->second.contractions;
        return;
      }
      used[first] = true;
      for (int j = first + 1; j < static_cast<int>(slots.size()); ++j) {
        if (used[j] || !pairs(slots[first].second, slots[j].second)) continue;
        used[j] = true;
        const auto [a, ha] = slots[first];
        const auto [b, hb] = slots[j];
        if (ha == Gl) edges.push_back({EdgeKind::Gluon, std::min(a, b), std::max(a, b)});
        else if (ha == QOut) edges.push_back({EdgeKind::Quark, a, b});
        else if (ha == QIn) edges.push_back({EdgeKind::Quark, b, a});
        else if (ha == GOut) edges.push_back({EdgeKind::Ghost, a, b});
        else edges.push_back({EdgeKind::Ghost, b, a});
        pair_rest();
        edges.pop_back();
        used[j] = false;
      }
      used[first] = false;
    };

    std::function<void(std::size_t)> place_legs = [&](std::size_t k) {
      if (k == legs.size()) {
        pair_rest();
        return;
      }
      for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
        if (used[i] || slots[i].second != leg_half(legs[k])) continue;
        used[i] = true;
        ext[k] = {legs[k].kind, legs[k].dir, slots[i].first};
        place_legs(k + 1);
        used[i] = false;
      }
    };
    place_legs(0);
  }
  return out;
}

/// Sym(Γ) by brute force: kind-preserving vertex permutations that fix
/// every external leg and map the edge multiset onto itself, times the
/// permutations of parallel edges and the flips of gluon self-loops.
inline long brute_symmetry(const FeynGraph& g) {
  const int V = g.num_vertices();
  auto norm = [](Edge e) {
    if (e.kind == EdgeKind::Gluon && e.from > e.to) std::swap(e.from, e.to);
    return e;
  };
  std::vector<Edge> sorted_edges;
  for (const Edge& e : g.edges) sorted_edges.push_back(norm(e));
  std::sort(sorted_edges.begin(), sorted_edges.end());

  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  long node_auts = 0;
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) ok = g.vertices[perm[v]] == g.vertices[v];
    for (const External& x : g.externals) ok = ok && perm[x.at] == x.at;
    if (!ok) continue;
    std::vector<Edge> mapped;
    for (const Edge& e : g.edges) mapped.push_back(norm({e.kind, perm[e.from], perm[e.to]}));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == sorted_edges) ++node_auts;
  } while (std::next_permutation(perm.begin(), perm.end()));

  long edge_part = 1;
  for (std::size_t i = 0; i < sorted_edges.size();) {
    std::size_t j = i;
    while (j < sorted_edges.size() && sorted_edges[j] == sorted_edges[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) edge_part *= static_cast<long>(k);
    const Edge& e = sorted_edges[i];
    if (e.kind == EdgeKind::Gluon && e.from == e.to) edge_part <<= (j - i);
    i = j;
  }
  return node_auts * edge_part;
}

}  // namespace oracle

#endif  // QCDHOPF_TESTS_ORACLES_HPP
