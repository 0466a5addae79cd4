#ifndef QCDHOPF_TESTS_FIXTURES_HPP
#define QCDHOPF_TESTS_FIXTURES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "qcdhopf/qcdhopf.hpp"

namespace fixture {

using namespace qcdhopf;
using E = EdgeKind;
using V = VertexKind;

inline const std::string kSourceDir = QCDHOPF_SOURCE_DIR;

inline FeynGraph qse1() { return quark_rainbow(1); }
inline FeynGraph rb2() { return quark_rainbow(2); }

/// QSE1 with `inserts` v5 vertices on the inner quark segment.
inline FeynGraph qse1_mass(int inserts = 1, bool bullet = false) {
  FeynGraph g;
  const int last = inserts + 1;
  g.vertices.assign(inserts + 2, V::V5);
  g.vertices.front() = g.vertices.back() = V::V1;
  for (int v = 0; v < last; ++v) g.edges.push_back({E::Quark, v, v + 1});
  g.edges.push_back({E::Gluon, 0, last});
  g.externals = {{E::Quark, Dir::In, 0}, {E::Quark, Dir::Out, last}};
  g.bullet = bullet;
  validate(g);
  return g;
}

inline FeynGraph ghost_loop() {
  FeynGraph g;
  g.vertices = {V::V2, V::V2};
  g.edges = {{E::Ghost, 0, 1}, {E::Ghost, 1, 0}};
  g.externals = {{E::Gluon, Dir::None, 0}, {E::Gluon, Dir::None, 1}};
  validate(g);
  return g;
}

inline FeynGraph gluon_bubble() {
  FeynGraph g;
  g.vertices = {V::V3, V::V3};
  g.edges = {{E::Gluon, 0, 1}, {E::Gluon, 0, 1}};
  g.externals = {{E::Gluon, Dir::None, 0}, {E::Gluon, Dir::None, 1}};
  validate(g);
  return g;
}

inline FeynGraph gluon_tadpole() {
  FeynGraph g;
  g.vertices = {V::V4};
  g.edges = {{E::Gluon, 0, 0}};
  g.externals = {{E::Gluon, Dir::None, 0}, {E::Gluon, Dir::None, 0}};
  validate(g);
  return g;
}

/// Three-loop gluon self-energy: a quark loop between the external vertices
/// 0 and 1 with two gluon rungs (2–4 and 3–5).
inline FeynGraph gse3() {
  FeynGraph g;
  g.vertices.assign(6, V::V1);
  g.edges = {{E::Quark, 0, 2}, {E::Quark, 2, 3}, {E::Quark, 3, 1}, {E::Quark, 1, 5},
             {E::Quark, 5, 4}, {E::Quark, 4, 0}, {E::Gluon, 2, 4}, {E::Gluon, 3, 5}};
  g.externals = {{E::Gluon, Dir::None, 0}, {E::Gluon, Dir::None, 1}};
  validate(g);
  return g;
}

/// Gluon self-energy with n rungs on a quark loop (n = 0: the plain bubble).
inline FeynGraph quark_loop_ladder(int rungs) {
  FeynGraph g;
  const int nv = 2 + 2 * rungs;
  g.vertices.assign(nv, V::V1);
  // upper path 0 → 2 → 4 … → 1, lower path 1 → … → 5 → 3 → 0
  std::vector<int> up{0}, down{1};
  for (int k = 0; k < rungs; ++k) up.push_back(2 + 2 * k);
  up.push_back(1);
  for (int k = rungs - 1; k >= 0; --k) down.push_back(3 + 2 * k);
  down.push_back(0);
  for (std::size_t i = 0; i + 1 < up.size(); ++i) g.edges.push_back({E::Quark, up[i], up[i + 1]});
  for (std::size_t i = 0; i + 1 < down.size(); ++i) g.edges.push_back({E::Quark, down[i], down[i + 1]});
  for (int k = 0; k < rungs; ++k) g.edges.push_back({E::Gluon, 2 + 2 * k, 3 + 2 * k});
  g.externals = {{E::Gluon, Dir::None, 0}, {E::Gluon, Dir::None, 1}};
  validate(g);
  return g;
}

/// One-loop quark–gluon vertex: external gluon at 0, quark pair at 1 and 2,
/// internal gluon joining 1 and 2.
inline FeynGraph vertex1() {
  FeynGraph g;
  g.vertices = {V::V1, V::V1, V::V1};
  g.edges = {{E::Quark, 0, 1}, {E::Quark, 2, 0}, {E::Gluon, 1, 2}};
  g.externals = {{E::Quark, Dir::In, 2}, {E::Quark, Dir::Out, 1}, {E::Gluon, Dir::None, 0}};
  validate(g);
  return g;
}

/// Two-loop nested quark–gluon vertex: quark line 4 → 3 → 0 → 1 → 2, inner
/// rung 1–3, outer rung 2–4, external gluon at 0.
inline FeynGraph vertex2_nested() {
  FeynGraph g;
  g.vertices.assign(5, V::V1);
  g.edges = {{E::Quark, 0, 1}, {E::Quark, 1, 2}, {E::Quark, 4, 3},
             {E::Quark, 3, 0}, {E::Gluon, 1, 3}, {E::Gluon, 2, 4}};
  g.externals = {{E::Quark, Dir::In, 4}, {E::Quark, Dir::Out, 2}, {E::Gluon, Dir::None, 0}};
  validate(g);
  return g;
}

/// The same graph with vertices and edges shuffled.
inline FeynGraph relabel(const FeynGraph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  FeynGraph h;
  h.vertices.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) h.vertices[p[v]] = g.vertices[v];
  for (const Edge& e : g.edges) {
    Edge f{e.kind, p[e.from], p[e.to]};
    if (f.kind == E::Gluon && f.from > f.to) std::swap(f.from, f.to);
    h.edges.push_back(f);
  }
  std::shuffle(h.edges.begin(), h.edges.end(), rng);
  for (const External& x : g.externals) h.externals.push_back({x.kind, x.dir, p[x.at]});
  h.bullet = g.bullet;
  return h;
}

}  // namespace fixture

#endif  // QCDHOPF_TESTS_FIXTURES_HPP
