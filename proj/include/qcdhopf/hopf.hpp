#ifndef QCDHOPF_HOPF_HPP
#define QCDHOPF_HOPF_HPP

// The Connes–Kreimer Hopf algebra on 1PI QCD graphs.
//
// Generators are interned in a process-wide registry keyed by the canonical
// form with interchangeable legs, so that a graph and its cographs share one
// symbol regardless of how external legs were numbered.  Elements are
// rational combinations of sorted generator multisets.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "graph_json.hpp"
#include "rational.hpp"
#include "subgraph.hpp"

namespace qcdhopf {

using GraphId = std::uint32_t;

struct GraphInfo {
  FeynGraph graph;  // canonical representative (legs interchangeable)
  std::string key;
  std::string hash;
  int loops = 0;
  Multidegree degree{};
  Residue residue = EdgeKind::Quark;
  int v5_count = 0;
  std::uint64_t automorphisms = 1;  // with legs interchangeable
};

/// Interns graphs by canonical key.  Lookups take a shared lock, inserts an
/// exclusive one; entries are never removed so references stay valid.
class GraphRegistry {
 public:
  GraphId intern(const FeynGraph& g) {
    auto c = canonicalize(g, LegMode::Unlabeled);
    {
      std::shared_lock lock(mu_);
      auto it = by_key_.find(c.key);
      if (it != by_key_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = by_key_.find(c.key);
    if (it != by_key_.end()) return it->second;
    GraphInfo info;
    info.key = c.key;
    info.hash = key_hash(c.key);
    info.loops = loop_number(c.graph);
    info.degree = multidegree(c.graph);
    info.residue = residue(c.graph);
    info.v5_count = c.graph.count(VertexKind::V5);
    info.automorphisms = c.symmetry;
    info.graph = std::move(c.graph);
    GraphId id = static_cast<GraphId>(infos_.size());
    infos_.push_back(std::move(info));
    by_key_.emplace(infos_.back().key, id);
    by_hash_.emplace(infos_.back().hash, id);
    return id;
  }

  const GraphInfo& info(GraphId id) const {
    std::shared_lock lock(mu_);
    return infos_.at(id);
  }

  std::optional<GraphId> find_hash(const std::string& hash) const {
    std::shared_lock lock(mu_);
    auto it = by_hash_.find(hash);
    if (it == by_hash_.end()) return std::nullopt;
    return it->second;
  }

 private:
  mutable std::shared_mutex mu_;
  std::deque<GraphInfo> infos_;
  std::unordered_map<std::string, GraphId> by_key_;
  std::unordered_map<std::string, GraphId> by_hash_;
};

inline GraphRegistry& registry() {
  static GraphRegistry r;
  return r;
}

inline GraphId intern(const FeynGraph& g) { return registry().intern(g); }
inline const GraphInfo& info(GraphId id) { return registry().info(id); }

/// Sorted multiset of generators; the empty monomial is 1.
using Monomial = std::vector<GraphId>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ m.size();
    for (GraphId g : m) {
      h ^= g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct MonomialPairHash {
  std::size_t operator()(const std::pair<Monomial, Monomial>& p) const noexcept {
    MonomialHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

/// Bigrading used for truncation: loop number and d5 (mass-vertex degree).
struct Grade {
  int loops = 0;
  int d5 = 0;
  Multidegree degree{};

  Grade& operator+=(const Grade& o) {
    loops += o.loops;
    d5 += o.d5;
    degree = degree + o.degree;
    return *this;
  }
};

inline Grade grade(GraphId g) {
  const auto& i = info(g);
  return {i.loops, i.degree[4], i.degree};
}

inline Grade grade(const Monomial& m) {
  Grade s;
  for (GraphId g : m) s += grade(g);
  return s;
}

/// Finite window onto the algebra: loops ≤ max_loops and loops + d5 ≤
/// max_loops + max_v5.  Both quantities are additive and nonnegative on
/// generators, so products and coproducts never leave the window.
struct TruncationSpec {
  int max_loops = 0;
  int max_v5 = 0;

  int weight_bound() const { return max_loops + max_v5; }
  bool contains(const Grade& g) const {
    return g.loops <= max_loops && g.loops + g.d5 <= weight_bound();
  }
  /// The window left over after spending grade g.
  TruncationSpec minus(const Grade& g) const {
    return {max_loops - g.loops, weight_bound() - g.loops - g.d5 - (max_loops - g.loops)};
  }
};

/// Rational combination of monomials.
class HopfElement {
 public:
  using Map = std::unordered_map<Monomial, Q, MonomialHash>;

  HopfElement() = default;
  static HopfElement one() { return scalar(Q(1)); }
  static HopfElement scalar(const Q& c) {
    HopfElement e;
    e.add(Monomial{}, c);
    return e;
  }
  static HopfElement generator(GraphId g, const Q& c = Q(1)) {
    HopfElement e;
    e.add(Monomial{g}, c);
    return e;
  }
  static HopfElement monomial(Monomial m, const Q& c = Q(1)) {
    HopfElement e;
    e.add(std::move(m), c);
    return e;
  }

  void add(const Monomial& m, const Q& c) {
    if (qcdhopf::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (qcdhopf::is_zero(it->second)) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Q coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Q(0) : it->second;
  }

  HopfElement& operator+=(const HopfElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  HopfElement& operator-=(const HopfElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  HopfElement& operator*=(const Q& s) {
    if (qcdhopf::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator-(HopfElement a) { return a *= Q(-1); }
  friend HopfElement operator*(HopfElement a, const Q& s) { return a *= s; }
  friend HopfElement operator*(const Q& s, HopfElement a) { return a *= s; }
  friend bool operator==(const HopfElement& a, const HopfElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Map terms_;
};

inline HopfElement multiply(const HopfElement& a, const HopfElement& b,
                            const std::optional<TruncationSpec>& w = std::nullopt) {
  HopfElement r;
  for (const auto& [ma, ca] : a.terms()) {
    Grade ga = grade(ma);
    if (w && !w->contains(ga)) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (w) {
        Grade g = ga;
        g += grade(mb);
        if (!w->contains(g)) continue;
      }
      r.add(mono_mul(ma, mb), ca * cb);
    }
  }
  return r;
}

inline HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  return multiply(a, b);
}

template <class Pred>
HopfElement filter(const HopfElement& x, Pred keep) {
  HopfElement r;
  for (const auto& [m, c] : x.terms()) {
    if (keep(m)) r.add(m, c);
  }
  return r;
}

inline HopfElement truncate(const HopfElement& x, const TruncationSpec& w) {
  return filter(x, [&](const Monomial& m) { return w.contains(grade(m)); });
}

/// q_l: the loop-number-l part.
inline HopfElement project_loops(const HopfElement& x, int l) {
  return filter(x, [&](const Monomial& m) { return grade(m).loops == l; });
}

/// p_n: the part of multidegree n.
inline HopfElement project_degree(const HopfElement& x, const Multidegree& n) {
  return filter(x, [&](const Monomial& m) { return grade(m).degree == n; });
}

/// Part of loop number l and d5 grade k.
inline HopfElement project_bigrade(const HopfElement& x, int l, int k) {
  return filter(x, [&](const Monomial& m) {
    Grade g = grade(m);
    return g.loops == l && g.d5 == k;
  });
}

/// Distinct multidegrees occurring in x, sorted.
inline std::vector<Multidegree> multidegrees(const HopfElement& x) {
  std::vector<Multidegree> out;
  for (const auto& [m, c] : x.terms()) out.push_back(grade(m).degree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Q counit(const HopfElement& x) { return x.coeff(Monomial{}); }

/// Element of H ⊗ H.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Map = std::unordered_map<Key, Q, MonomialPairHash>;

  void add(const Monomial& a, const Monomial& b, const Q& c) {
    if (qcdhopf::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(Key{a, b}, c);
    if (!fresh) {
      it->second += c;
      if (qcdhopf::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const TensorElement& o, const Q& s = Q(1)) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c * s);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Q coeff(const Monomial& a, const Monomial& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Q(0) : it->second;
  }

  TensorElement& operator-=(const TensorElement& o) {
    add(o, Q(-1));
    return *this;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Map terms_;
};

inline TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                                const std::optional<TruncationSpec>& w = std::nullopt) {
  TensorElement r;
  for (const auto& [ka, ca] : a.terms()) {
    Grade ga = grade(ka.first);
    ga += grade(ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      if (w) {
        Grade g = ga;
        g += grade(kb.first);
        g += grade(kb.second);
        if (!w->contains(g)) continue;
      }
      r.add(mono_mul(ka.first, kb.first), mono_mul(ka.second, kb.second), ca * cb);
    }
  }
  return r;
}

inline TensorElement tensor(const HopfElement& a, const HopfElement& b) {
  TensorElement r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) r.add(ma, mb, ca * cb);
  }
  return r;
}

/// Element of H ⊗ H ⊗ H, for coassociativity.
using Tensor3 = std::map<std::array<Monomial, 3>, Q>;

inline void add3(Tensor3& t, const std::array<Monomial, 3>& k, const Q& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = t.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

namespace detail {

class CoproductCache {
 public:
  template <class F>
  const TensorElement& get(GraphId g, F compute) {
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(g);
      if (it != cache_.end()) return it->second;
    }
    TensorElement t = compute();
    std::unique_lock lock(mu_);
    return cache_.try_emplace(g, std::move(t)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<GraphId, TensorElement> cache_;
};

class AntipodeCache {
 public:
  template <class F>
  const HopfElement& get(GraphId g, F compute) {
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(g);
      if (it != cache_.end()) return it->second;
    }
    HopfElement s = compute();
    std::unique_lock lock(mu_);
    return cache_.try_emplace(g, std::move(s)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<GraphId, HopfElement> cache_;
};

inline CoproductCache& coproduct_cache() {
  static CoproductCache c;
  return c;
}
inline AntipodeCache& antipode_cache() {
  static AntipodeCache c;
  return c;
}

}  // namespace detail

/// The middle terms of Δ(Γ): Σ_γ γ ⊗ Γ/γ over proper divergent unions,
/// with both contractions for quark two-point components.
inline TensorElement reduced_coproduct(
    GraphId g, SubgraphPolicy policy = SubgraphPolicy::AnyEdgeSubset) {
  const FeynGraph& G = info(g).graph;
  TensorElement t;
  for (const auto& u : divergent_subgraph_unions(G, policy)) {
    const int nc = static_cast<int>(u.components.size());
    std::vector<int> quark2;
    for (int c = 0; c < nc; ++c) {
      const auto& r = u.components[c].residue;
      if (std::holds_alternative<EdgeKind>(r) && std::get<EdgeKind>(r) == EdgeKind::Quark) {
        quark2.push_back(c);
      }
    }
    for (std::uint32_t pick = 0; pick < (1u << quark2.size()); ++pick) {
      std::vector<Decoration> dec(nc, Decoration::Edge);
      for (std::size_t k = 0; k < quark2.size(); ++k) {
        if (pick >> k & 1u) dec[quark2[k]] = Decoration::Bullet;
      }
      Monomial left;
      for (int c = 0; c < nc; ++c) {
        left.push_back(intern(component_graph(G, u.components[c], dec[c])));
      }
      std::sort(left.begin(), left.end());
      Monomial right{intern(contract(G, u, dec))};
      t.add(left, right, Q(1));
    }
  }
  return t;
}

inline const TensorElement& coproduct(GraphId g) {
  return detail::coproduct_cache().get(g, [g] {
    TensorElement t = reduced_coproduct(g);
    t.add(Monomial{g}, Monomial{}, Q(1));
    t.add(Monomial{}, Monomial{g}, Q(1));
    return t;
  });
}

/// Uncached coproduct under an explicit subgraph policy.
inline TensorElement coproduct(GraphId g, SubgraphPolicy policy) {
  TensorElement t = reduced_coproduct(g, policy);
  t.add(Monomial{g}, Monomial{}, Q(1));
  t.add(Monomial{}, Monomial{g}, Q(1));
  return t;
}

inline TensorElement coproduct(const Monomial& m) {
  TensorElement t;
  t.add(Monomial{}, Monomial{}, Q(1));
  for (GraphId g : m) t = tensor_mul(t, coproduct(g));
  return t;
}

inline TensorElement coproduct(const HopfElement& x) {
  TensorElement t;
  for (const auto& [m, c] : x.terms()) t.add(coproduct(m), c);
  return t;
}

/// S(Γ) = −Γ − Σ S(γ)·Γ/γ.
inline const HopfElement& antipode(GraphId g);

inline HopfElement antipode(const Monomial& m) {
  HopfElement r = HopfElement::one();
  for (GraphId g : m) r = r * antipode(g);
  return r;
}

inline const HopfElement& antipode(GraphId g) {
  return detail::antipode_cache().get(g, [g] {
    HopfElement s = -HopfElement::generator(g);
    const TensorElement middle = reduced_coproduct(g);
    for (const auto& [k, c] : middle.terms()) {
      s -= antipode(k.first) * HopfElement::monomial(k.second) * c;
    }
    return s;
  });
}

inline HopfElement antipode(const HopfElement& x) {
  HopfElement r;
  for (const auto& [m, c] : x.terms()) r += antipode(m) * c;
  return r;
}

/// (Δ ⊗ id)Δ and (id ⊗ Δ)Δ.
inline Tensor3 coassoc_left(const HopfElement& x) {
  Tensor3 out;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    const TensorElement d2 = coproduct(k.first);
    for (const auto& [k2, c2] : d2.terms()) {
      add3(out, {k2.first, k2.second, k.second}, c * c2);
    }
  }
  return out;
}

inline Tensor3 coassoc_right(const HopfElement& x) {
  Tensor3 out;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    const TensorElement d2 = coproduct(k.second);
    for (const auto& [k2, c2] : d2.terms()) {
      add3(out, {k.first, k2.first, k2.second}, c * c2);
    }
  }
  return out;
}

/// (ε ⊗ id)Δx and (id ⊗ ε)Δx.
inline HopfElement counit_left(const HopfElement& x) {
  HopfElement r;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    if (k.first.empty()) r.add(k.second, c);
  }
  return r;
}
inline HopfElement counit_right(const HopfElement& x) {
  HopfElement r;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    if (k.second.empty()) r.add(k.first, c);
  }
  return r;
}

/// m(S ⊗ id)Δx and m(id ⊗ S)Δx.
inline HopfElement antipode_left(const HopfElement& x) {
  HopfElement r;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    r += antipode(k.first) * HopfElement::monomial(k.second) * c;
  }
  return r;
}
inline HopfElement antipode_right(const HopfElement& x) {
  HopfElement r;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    r += HopfElement::monomial(k.first) * antipode(k.second) * c;
  }
  return r;
}

// Deterministic ordering and JSON.

/// Generators ordered by (loops, canonical key).
inline bool generator_less(GraphId a, GraphId b) {
  const auto& ia = info(a);
  const auto& ib = info(b);
  if (ia.loops != ib.loops) return ia.loops < ib.loops;
  return ia.key < ib.key;
}

inline Monomial display_order(Monomial m) {
  std::sort(m.begin(), m.end(), generator_less);
  return m;
}

inline bool monomial_less(const Monomial& a, const Monomial& b) {
  int la = grade(a).loops, lb = grade(b).loops;
  if (la != lb) return la < lb;
  auto da = display_order(a), db = display_order(b);
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end(),
                                      generator_less);
}

inline std::vector<std::pair<Monomial, Q>> sorted_terms(const HopfElement& x) {
  std::vector<std::pair<Monomial, Q>> v(x.terms().begin(), x.terms().end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return v;
}

inline std::vector<std::pair<TensorElement::Key, Q>> sorted_terms(const TensorElement& t) {
  std::vector<std::pair<TensorElement::Key, Q>> v(t.terms().begin(), t.terms().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (monomial_less(a.first.first, b.first.first)) return true;
    if (monomial_less(b.first.first, a.first.first)) return false;
    return monomial_less(a.first.second, b.first.second);
  });
  return v;
}

inline json monomial_json(const Monomial& m) {
  json arr = json::array();
  for (GraphId g : display_order(m)) arr.push_back(info(g).hash);
  return arr;
}

inline json to_json(const HopfElement& x) {
  json out = json::array();
  for (const auto& [m, c] : sorted_terms(x)) {
    out.push_back({{"monomial", monomial_json(m)}, {"coeff", to_string(c)}});
  }
  return out;
}

inline json to_json(const TensorElement& t) {
  json out = json::array();
  for (const auto& [k, c] : sorted_terms(t)) {
    out.push_back({{"left", monomial_json(k.first)},
                   {"right", monomial_json(k.second)},
                   {"coeff", to_string(c)}});
  }
  return out;
}

/// Canonical graphs referenced by an element, keyed by hash.
inline json graph_table(const std::vector<GraphId>& ids) {
  json out = json::object();
  for (GraphId g : ids) out[info(g).hash] = graph_to_json(info(g).graph);
  return out;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_HOPF_HPP
