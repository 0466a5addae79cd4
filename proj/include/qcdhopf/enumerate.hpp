#ifndef QCDHOPF_ENUMERATE_HPP
#define QCDHOPF_ENUMERATE_HPP

// Enumeration of 1PI graphs with a given residue, loop number and bound on
// mass insertions.
//
// For every admissible vertex multiset the external legs are attached
// first (untouched vertices of one kind are interchangeable, so only the
// first one is tried), then quark and ghost lines are chosen as bijections
// between free out- and in-slots, and the gluon lines as a symmetric
// multiplicity matrix with prescribed row sums.  Candidates are filtered for
// 1PI and deduplicated by canonical key.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace qcdhopf {

namespace detail {

/// External legs in the fixed label order quark-in, quark-out, ghost-in,
/// ghost-out, gluons.
inline std::vector<External> residue_legs(const Residue& r) {
  LegProfile p = leg_profile(r);
  std::vector<External> legs;
  for (int i = 0; i < p[0]; ++i) legs.push_back({EdgeKind::Quark, Dir::In, -1});
  for (int i = 0; i < p[1]; ++i) legs.push_back({EdgeKind::Quark, Dir::Out, -1});
  for (int i = 0; i < p[2]; ++i) legs.push_back({EdgeKind::Ghost, Dir::In, -1});
  for (int i = 0; i < p[3]; ++i) legs.push_back({EdgeKind::Ghost, Dir::Out, -1});
  for (int i = 0; i < p[4]; ++i) legs.push_back({EdgeKind::Gluon, Dir::None, -1});
  return legs;
}

/// Vertex count vectors (n1..n5) compatible with residue r at L loops.
inline std::vector<std::array<int, 5>> vertex_counts(const Residue& r, int loops,
                                                     int max_v5) {
  int target = 2 * loops;
  if (std::holds_alternative<VertexKind>(r)) {
    target += valence(std::get<VertexKind>(r)) - 2;
  }
  LegProfile ext = leg_profile(r);
  int ext_legs = ext[0] + ext[1] + ext[2] + ext[3] + ext[4];
  std::vector<std::array<int, 5>> out;
  for (int n4 = 0; 2 * n4 <= target; ++n4) {
    for (int n3 = 0; n3 + 2 * n4 <= target; ++n3) {
      for (int n2 = 0; n2 + n3 + 2 * n4 <= target; ++n2) {
        int n1 = target - n2 - n3 - 2 * n4;
        for (int n5 = 0; n5 <= max_v5; ++n5) {
          // Ghost lines need v2 vertices, quark lines v1/v5 vertices.
          if ((ext[2] + ext[3]) > 0 && n2 == 0) continue;
          if ((ext[0] + ext[1]) > 0 && n1 + n5 == 0) continue;
          int vertices = n1 + n2 + n3 + n4 + n5;
          int half = 3 * (n1 + n2 + n3) + 4 * n4 + 2 * n5;
          int internal = half - ext_legs;
          if (internal < 0 || internal % 2 != 0) continue;
          if (internal / 2 != loops + vertices - 1) continue;
          int gluon_half = n1 + n2 + 3 * n3 + 4 * n4 - ext[4];
          if (gluon_half < 0 || gluon_half % 2 != 0) continue;
          out.push_back({n1, n2, n3, n4, n5});
        }
      }
    }
  }
  return out;
}

class GraphEnumerator {
 public:
  GraphEnumerator(const Residue& r, const std::array<int, 5>& counts, bool bullet)
      : bullet_(bullet) {
    for (int j = 0; j < 5; ++j) {
      for (int c = 0; c < counts[j]; ++c) kinds_.push_back(kAllVertexKinds[j]);
    }
    legs_ = residue_legs(r);
    nv_ = static_cast<int>(kinds_.size());
    free_.resize(nv_);
    for (int v = 0; v < nv_; ++v) free_[v] = leg_profile(kinds_[v]);
    touched_.assign(nv_, false);
  }

  void run(std::map<std::string, FeynGraph>& found) {
    found_ = &found;
    attach(0);
  }

 private:
  void attach(std::size_t leg) {
    if (leg == legs_.size()) {
      quark_lines();
      return;
    }
    const External& x = legs_[leg];
    int slot = leg_slot(x.kind, x.dir);
    std::set<VertexKind> fresh_tried;
    for (int v = 0; v < nv_; ++v) {
      if (free_[v][slot] == 0) continue;
      if (!touched_[v]) {
        if (!fresh_tried.insert(kinds_[v]).second) continue;
      }
      bool was = touched_[v];
      --free_[v][slot];
      touched_[v] = true;
      legs_[leg].at = v;
      attach(leg + 1);
      touched_[v] = was;
      ++free_[v][slot];
    }
  }

  // Oriented lines: bijection between vertices with a free out-slot and
  // vertices with a free in-slot.
  void oriented_lines(EdgeKind kind, int in_slot, int out_slot,
                      const std::function<void()>& next) {
    std::vector<int> outs, ins;
    for (int v = 0; v < nv_; ++v) {
      for (int c = 0; c < free_[v][out_slot]; ++c) outs.push_back(v);
      for (int c = 0; c < free_[v][in_slot]; ++c) ins.push_back(v);
    }
    if (outs.size() != ins.size()) return;
    std::sort(ins.begin(), ins.end());
    std::size_t base = edges_.size();
    do {
      edges_.resize(base);
      for (std::size_t i = 0; i < outs.size(); ++i) {
        edges_.push_back({kind, outs[i], ins[i]});
      }
      next();
    } while (std::next_permutation(ins.begin(), ins.end()));
    edges_.resize(base);
  }

  void quark_lines() {
    oriented_lines(EdgeKind::Quark, leg_slot(EdgeKind::Quark, Dir::In),
                   leg_slot(EdgeKind::Quark, Dir::Out), [this] { ghost_lines(); });
  }

  void ghost_lines() {
    oriented_lines(EdgeKind::Ghost, leg_slot(EdgeKind::Ghost, Dir::In),
                   leg_slot(EdgeKind::Ghost, Dir::Out), [this] {
                     rem_.resize(nv_);
                     for (int v = 0; v < nv_; ++v) rem_[v] = free_[v][4];
                     gluon_lines(0, 0);
                   });
  }

  void gluon_lines(int i, int j) {
    if (i == nv_) {
      emit();
      return;
    }
    if (j == nv_) {
      if (rem_[i] != 0) return;
      gluon_lines(i + 1, i + 1);
      return;
    }
    std::size_t base = edges_.size();
    if (i == j) {
      for (int s = rem_[i] / 2; s >= 0; --s) {
        edges_.resize(base);
        for (int c = 0; c < s; ++c) edges_.push_back({EdgeKind::Gluon, i, i});
        rem_[i] -= 2 * s;
        gluon_lines(i, j + 1);
        rem_[i] += 2 * s;
      }
    } else {
      int hi = std::min(rem_[i], rem_[j]);
      for (int c = hi; c >= 0; --c) {
        edges_.resize(base);
        for (int k = 0; k < c; ++k) edges_.push_back({EdgeKind::Gluon, i, j});
        rem_[i] -= c;
        rem_[j] -= c;
        gluon_lines(i, j + 1);
        rem_[i] += c;
        rem_[j] += c;
      }
    }
    edges_.resize(base);
  }

  void emit() {
    FeynGraph g;
    g.vertices = kinds_;
    g.edges = edges_;
    g.externals = legs_;
    g.bullet = bullet_;
    if (!is_one_particle_irreducible(g)) return;
    auto c = canonicalize(g, LegMode::Labeled);
    found_->emplace(c.key, std::move(c.graph));
  }

  bool bullet_;
  int nv_ = 0;
  std::vector<VertexKind> kinds_;
  std::vector<External> legs_;
  std::vector<LegProfile> free_;
  std::vector<bool> touched_;
  std::vector<int> rem_;
  std::vector<Edge> edges_;
  std::map<std::string, FeynGraph>* found_ = nullptr;
};

}  // namespace detail

/// All 1PI graphs with residue r, exactly `loops` loops and at most max_v5
/// mass vertices, in canonical (legs-labeled) form, sorted by canonical key.
/// Residue v5 yields the bulleted quark two-point graphs.
inline std::vector<FeynGraph> enumerate_graphs(const Residue& r, int loops,
                                               int max_v5) {
  std::map<std::string, FeynGraph> found;
  if (loops < 1 || max_v5 < 0) return {};
  bool bullet = std::holds_alternative<VertexKind>(r) &&
                std::get<VertexKind>(r) == VertexKind::V5;
  Residue shape = bullet ? Residue{EdgeKind::Quark} : r;
  for (const auto& counts : detail::vertex_counts(r, loops, max_v5)) {
    detail::GraphEnumerator e(shape, counts, bullet);
    e.run(found);
  }
  std::vector<FeynGraph> out;
  out.reserve(found.size());
  for (auto& [k, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_ENUMERATE_HPP
