#ifndef QCDHOPF_CANONICAL_HPP
#define QCDHOPF_CANONICAL_HPP

// Canonical labeling and automorphism counting for FeynGraph.
//
// Vertices and external legs become nodes of a colored directed multigraph.
// A color-refinement / individualization search visits every leaf of the
// search tree; the lexicographically smallest leaf code is the canonical
// form and the number of leaves attaining it is the order of the node-level
// automorphism group.  Graphs here have at most a dozen or so nodes, so the
// search is exhaustive without automorphism pruning.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace qcdhopf {

/// How external legs are treated by the canonical labeling.
enum class LegMode {
  /// Each leg is distinguishable and fixed by automorphisms.
  Labeled,
  /// Legs of the same kind and direction are interchangeable.
  Unlabeled,
};

struct CanonicalForm {
  FeynGraph graph;             // relabeled representative
  std::string key;             // compact canonical string
  std::uint64_t node_automorphisms = 1;
  std::uint64_t symmetry = 1;  // including parallel-edge and self-loop factors
};

namespace detail {

class CanonicalSearch {
 public:
  CanonicalSearch(const FeynGraph& g, LegMode mode) : g_(g) {
    nv_ = g.num_vertices();
    n_ = nv_ + static_cast<int>(g.externals.size());
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0u);
    for (const auto& e : g.edges) add(e.kind, e.from, e.to);
    for (int k = 0; k < static_cast<int>(g.externals.size()); ++k) {
      const auto& x = g.externals[k];
      int node = nv_ + k;
      if (x.kind == EdgeKind::Gluon || x.dir == Dir::In) {
        add(x.kind, node, x.at);
      } else {
        add(x.kind, x.at, node);
      }
    }
    base_color_.resize(n_);
    for (int v = 0; v < nv_; ++v) {
      base_color_[v] = static_cast<std::uint32_t>(g.vertices[v]);
    }
    for (int k = 0; k < static_cast<int>(g.externals.size()); ++k) {
      const auto& x = g.externals[k];
      std::uint32_t c = 16 + leg_slot(x.kind, x.dir);
      if (mode == LegMode::Labeled) c = 64 + static_cast<std::uint32_t>(k);
      base_color_[nv_ + k] = c;
    }
  }

  void run() {
    std::vector<std::uint32_t> colors = base_color_;
    refine(colors);
    search(colors);
  }

  const std::vector<int>& best_order() const { return best_order_; }
  std::uint64_t ties() const { return ties_; }
  int num_vertices() const { return nv_; }

 private:
  void add(EdgeKind k, int from, int to) {
    std::uint32_t unit = k == EdgeKind::Quark   ? (1u << 16)
                         : k == EdgeKind::Ghost ? (1u << 8)
                                                : 1u;
    at(from, to) += unit;
    if (k == EdgeKind::Gluon && from != to) at(to, from) += unit;
  }

  std::uint32_t& at(int i, int j) { return adj_[static_cast<std::size_t>(i) * n_ + j]; }
  std::uint32_t at(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j]; }

  // Equitable refinement; colors are re-ranked to 0..k-1 in signature order.
  void refine(std::vector<std::uint32_t>& colors) const {
    int cells = count_cells(colors);
    for (;;) {
      std::vector<std::vector<std::uint64_t>> sig(n_);
      for (int i = 0; i < n_; ++i) {
        auto& s = sig[i];
        s.push_back(colors[i]);
        std::vector<std::uint64_t> nb;
        for (int j = 0; j < n_; ++j) {
          std::uint32_t out = at(i, j), in = at(j, i);
          if (out == 0 && in == 0) continue;
          nb.push_back((static_cast<std::uint64_t>(colors[j]) << 48) ^
                       (static_cast<std::uint64_t>(out) << 24) ^ in ^
                       (i == j ? (1ull << 47) : 0));
        }
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::vector<std::vector<std::uint64_t>> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (int i = 0; i < n_; ++i) {
        colors[i] = static_cast<std::uint32_t>(
            std::lower_bound(uniq.begin(), uniq.end(), sig[i]) - uniq.begin());
      }
      int now = static_cast<int>(uniq.size());
      if (now == cells) break;
      cells = now;
    }
  }

  static int count_cells(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(const std::vector<std::uint32_t>& colors) {
    // Target cell: smallest color shared by more than one node.
    std::vector<int> count(n_, 0);
    for (auto c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != static_cast<std::uint32_t>(target)) continue;
      std::vector<std::uint32_t> next(n_);
      for (int i = 0; i < n_; ++i) {
        next[i] = 2 * colors[i] + ((colors[i] == colors[v] && i != v) ? 1 : 0);
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<std::uint32_t>& colors) {
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[colors[i]] = i;
    std::vector<std::uint32_t> code;
    code.reserve(static_cast<std::size_t>(n_) * n_ + n_);
    for (int p = 0; p < n_; ++p) code.push_back(base_color_[order[p]]);
    for (int p = 0; p < n_; ++p) {
      for (int q = 0; q < n_; ++q) code.push_back(at(order[p], order[q]));
    }
    if (best_code_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      ties_ = 1;
    } else if (code == best_code_) {
      ++ties_;
    }
  }

  const FeynGraph& g_;
  int nv_ = 0;
  int n_ = 0;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> base_color_;
  std::vector<std::uint32_t> best_code_;
  std::vector<int> best_order_;
  std::uint64_t ties_ = 0;
};

inline std::uint64_t edge_symmetry(const FeynGraph& g) {
  std::map<std::tuple<int, int, int>, int> mult;
  for (const auto& e : g.edges) {
    int a = e.from, b = e.to;
    if (e.kind == EdgeKind::Gluon && a > b) std::swap(a, b);
    ++mult[{static_cast<int>(e.kind), a, b}];
  }
  std::uint64_t s = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 2; i <= m; ++i) s *= static_cast<std::uint64_t>(i);
    auto [kind, a, b] = k;
    if (kind == static_cast<int>(EdgeKind::Gluon) && a == b) s <<= m;
  }
  return s;
}

inline std::string graph_key(const FeynGraph& g) {
  std::string s = g.bullet ? "B" : "b";
  s += "|v";
  for (auto v : g.vertices) s += static_cast<char>('0' + static_cast<int>(v));
  s += "|e";
  for (const auto& e : g.edges) {
    s += static_cast<char>('0' + static_cast<int>(e.kind));
    s += std::to_string(e.from) + "." + std::to_string(e.to) + ",";
  }
  s += "|x";
  for (const auto& x : g.externals) {
    s += static_cast<char>('0' + static_cast<int>(x.kind));
    s += static_cast<char>('0' + static_cast<int>(x.dir));
    s += std::to_string(x.at) + ",";
  }
  return s;
}

}  // namespace detail

/// Puts a graph into canonical form.  Isomorphic inputs (respecting kinds,
/// orientations, the bullet, and, in Labeled mode, every external leg) give
/// identical output graphs and keys.
inline CanonicalForm canonicalize(const FeynGraph& g,
                                  LegMode mode = LegMode::Labeled) {
  detail::CanonicalSearch search(g, mode);
  search.run();
  const auto& order = search.best_order();
  const int nv = g.num_vertices();

  std::vector<int> vnew(nv), xnew(g.externals.size());
  int vi = 0, xi = 0;
  for (int node : order) {
    if (node < nv) vnew[node] = vi++;
    else xnew[node - nv] = xi++;
  }

  CanonicalForm out;
  FeynGraph& c = out.graph;
  c.bullet = g.bullet;
  c.vertices.resize(nv);
  for (int v = 0; v < nv; ++v) c.vertices[vnew[v]] = g.vertices[v];
  for (const auto& e : g.edges) {
    Edge n{e.kind, vnew[e.from], vnew[e.to]};
    if (n.kind == EdgeKind::Gluon && n.from > n.to) std::swap(n.from, n.to);
    c.edges.push_back(n);
  }
  std::sort(c.edges.begin(), c.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(a.from, a.to, a.kind) < std::tuple(b.from, b.to, b.kind);
  });
  c.externals.resize(g.externals.size());
  for (std::size_t k = 0; k < g.externals.size(); ++k) {
    External x = g.externals[k];
    x.at = vnew[x.at];
    std::size_t slot = mode == LegMode::Labeled ? k : xnew[k];
    c.externals[slot] = x;
  }
  out.key = detail::graph_key(c);
  out.node_automorphisms = search.ties();
  out.symmetry = search.ties() * detail::edge_symmetry(g);
  return out;
}

/// Sym(Γ): order of the automorphism group fixing every external leg.
inline std::uint64_t symmetry_factor(const FeynGraph& g) {
  return canonicalize(g, LegMode::Labeled).symmetry;
}

/// Number of distinct leg labelings of the unlabeled class of g, i.e. the
/// number of Labeled-mode isomorphism classes sharing g's Unlabeled class.
inline std::uint64_t labeling_count(const FeynGraph& g) {
  auto fixed = canonicalize(g, LegMode::Labeled).symmetry;
  auto free = canonicalize(g, LegMode::Unlabeled).symmetry;
  auto p = g.external_profile();
  std::uint64_t perms = 1;
  for (int c : p) {
    for (int i = 2; i <= c; ++i) perms *= static_cast<std::uint64_t>(i);
  }
  return perms * fixed / free;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_CANONICAL_HPP
