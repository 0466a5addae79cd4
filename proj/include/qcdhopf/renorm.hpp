#ifndef QCDHOPF_RENORM_HPP
#define QCDHOPF_RENORM_HPP

// Characters with values in truncated Laurent series, Birkhoff
// decomposition by the Bogoliubov recursion in minimal subtraction, toy
// Feynman rules, Slavnov–Taylor compatible characters and the
// renormalization-group flow.

#include <algorithm>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "green.hpp"
#include "hopf.hpp"
#include "laurent.hpp"
#include "linalg.hpp"

namespace qcdhopf {

/// Algebra morphism H → Laurent, given by its values on generators.  Values
/// are computed on demand and memoized; copies share the memo.
class Character {
 public:
  using ValueFn = std::function<Laurent(const Character& self, GraphId g)>;

  Character() : Character([](const Character&, GraphId) { return Laurent(); }) {}
  explicit Character(ValueFn f) : s_(std::make_shared<State>()) { s_->fn = std::move(f); }

  /// Character from a plain function of the generator.
  static Character of(std::function<Laurent(GraphId)> f) {
    return Character([f = std::move(f)](const Character&, GraphId g) { return f(g); });
  }

  Laurent operator()(GraphId g) const {
    {
      std::shared_lock lock(s_->mu);
      auto it = s_->memo.find(g);
      if (it != s_->memo.end()) return it->second;
    }
    Laurent v = s_->fn(*this, g);
    std::unique_lock lock(s_->mu);
    return s_->memo.try_emplace(g, std::move(v)).first->second;
  }

  Laurent operator()(const Monomial& m) const {
    Laurent r(1);
    for (GraphId g : m) r *= (*this)(g);
    return r;
  }

  Laurent operator()(const HopfElement& x) const {
    Laurent r;
    for (const auto& [m, c] : x.terms()) r += (*this)(m) * Laurent(c);
    return r;
  }

 private:
  struct State {
    ValueFn fn;
    mutable std::shared_mutex mu;
    std::unordered_map<GraphId, Laurent> memo;
  };
  std::shared_ptr<State> s_;
};

/// u∘ε: zero on every generator.
inline Character unit_character() { return Character(); }

/// (φ⋆ψ)(Γ) = Σ φ(Γ′)ψ(Γ″) over Δ(Γ).
inline Character convolve(const Character& phi, const Character& psi) {
  return Character::of([phi, psi](GraphId g) {
    Laurent r;
    for (const auto& [k, c] : coproduct(g).terms()) {
      r += phi(k.first) * psi(k.second) * Laurent(c);
    }
    return r;
  });
}

/// φ∘S, the convolution inverse.
inline Character inverse(const Character& phi) {
  return Character::of([phi](GraphId g) { return phi(antipode(g)); });
}

/// Applies f to every value (used for ℓ := 0, t := t + s and the like).
inline Character map_values(const Character& phi, std::function<Poly(const Poly&)> f) {
  return Character::of([phi, f = std::move(f)](GraphId g) { return phi(g).map_coeffs(f); });
}

/// Character agreeing with `base` except on the listed generators.
inline Character with_overrides(const Character& base,
                                std::unordered_map<GraphId, Laurent> values) {
  return Character::of([base, values = std::move(values)](GraphId g) {
    auto it = values.find(g);
    return it != values.end() ? it->second : base(g);
  });
}

struct BirkhoffPair {
  Character minus;
  Character plus;
};

/// γ_-(Γ) = −T[γ(Γ) + Σ γ_-(γ′)γ(Γ/γ′)] with T the pole part, and
/// γ_+ = γ_- ⋆ γ.
inline BirkhoffPair birkhoff(const Character& gamma) {
  Character minus([gamma](const Character& self, GraphId g) {
    Laurent bar = gamma(g);
    for (const auto& [k, c] : coproduct(g).terms()) {
      if (k.first.empty() || k.second.empty()) continue;
      bar += self(k.first) * gamma(k.second) * Laurent(c);
    }
    return -pole_part(bar);
  });
  return {minus, convolve(minus, gamma)};
}

// Toy Feynman rules.

class OverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Connected divergent subgraphs of g with sorted edge lists.
inline std::vector<SubgraphComponent> divergent_components(const FeynGraph& g) {
  std::vector<SubgraphComponent> subs;
  for (auto& u : divergent_subgraph_unions(g)) {
    if (u.components.size() == 1) subs.push_back(std::move(u.components[0]));
  }
  for (auto& s : subs) std::sort(s.edges.begin(), s.edges.end());
  return subs;
}

/// Nested (one contains the other) or vertex-disjoint.
inline bool compatible(const SubgraphComponent& a, const SubgraphComponent& b) {
  auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  if (subset(a.edges, b.edges) || subset(b.edges, a.edges)) return true;
  std::vector<int> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(common));
  return common.empty();
}

/// μ^{zL}·Π_v 1/(z·w(v)) over the forest `w` (root included).
inline Laurent forest_value(const std::vector<int>& w, int loops, bool with_mu, int order) {
  const int depth = static_cast<int>(w.size());
  Q scale(1);
  for (int x : w) scale /= x;
  Poly a = with_mu ? Poly::var(Var::Ell, 1, Q(loops)) : Poly();
  return Laurent::monomial(-depth, Poly(scale)) * Laurent::exp_z(a, order + depth);
}

}  // namespace detail

/// Loop numbers along the nesting tree of divergent subgraphs of g, root
/// first.  Throws OverlapError when two divergent subgraphs overlap.
inline std::vector<int> nesting_weights(const FeynGraph& g) {
  const auto subs = detail::divergent_components(g);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (!detail::compatible(subs[i], subs[j])) {
        throw OverlapError("overlapping divergent subgraphs");
      }
    }
  }
  std::vector<int> w{loop_number(g)};
  for (const auto& s : subs) w.push_back(s.loops);
  return w;
}

/// μ^{zL}·Π_v 1/(z·w(v)) with μ^{zL} = exp(zLℓ), known through z^{order−1}.
/// Graphs with an explicit mass vertex evaluate to 0.  with_mu = false
/// sets ℓ = 0.
inline Laurent nested_toy_rules(const FeynGraph& g, bool with_mu, int order) {
  if (g.count(VertexKind::V5) > 0) return Laurent().truncated(order);
  return detail::forest_value(nesting_weights(g), loop_number(g), with_mu, order);
}

/// Sum of the nested value over all maximal forests of pairwise compatible
/// divergent subgraphs.  Agrees with nested_toy_rules when there is no
/// overlap.
inline Laurent forest_toy_rules(const FeynGraph& g, bool with_mu, int order) {
  if (g.count(VertexKind::V5) > 0) return Laurent().truncated(order);
  const auto subs = detail::divergent_components(g);
  const int n = static_cast<int>(subs.size());
  if (n > 20) throw OverlapError("too many divergent subgraphs for the forest sum");
  const int L = loop_number(g);
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, true));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) ok[i][j] = ok[j][i] = detail::compatible(subs[i], subs[j]);
  }
  Laurent total = Laurent().truncated(order);
  std::vector<int> forest;
  // Depth-first over subgraphs in index order; a forest is kept when no
  // skipped subgraph could be added to it.
  std::function<void(int)> grow = [&](int k) {
    if (k == n) {
      for (int s = 0; s < n; ++s) {
        if (std::find(forest.begin(), forest.end(), s) != forest.end()) continue;
        if (std::all_of(forest.begin(), forest.end(), [&](int f) { return ok[s][f]; })) return;
      }
      std::vector<int> w{L};
      for (int f : forest) w.push_back(subs[f].loops);
      total += detail::forest_value(w, L, with_mu, order);
      return;
    }
    if (std::all_of(forest.begin(), forest.end(), [&](int f) { return ok[k][f]; })) {
      forest.push_back(k);
      grow(k + 1);
      forest.pop_back();
    }
    grow(k + 1);
  };
  grow(0);
  return total;
}

/// The n-loop quark rainbow: a quark line through 2n v1 vertices with gluon
/// arcs (k, 2n−1−k), optionally bulleted.
inline FeynGraph quark_rainbow(int n, bool bullet = false) {
  FeynGraph g;
  const int nv = 2 * n;
  g.vertices.assign(nv, VertexKind::V1);
  for (int i = 0; i + 1 < nv; ++i) g.edges.push_back({EdgeKind::Quark, i, i + 1});
  for (int k = 0; k < n; ++k) g.edges.push_back({EdgeKind::Gluon, k, nv - 1 - k});
  g.externals = {{EdgeKind::Quark, Dir::In, 0}, {EdgeKind::Quark, Dir::Out, nv - 1}};
  g.bullet = bullet;
  validate(g);
  return g;
}

/// How toy_character treats graphs with overlapping divergences.
enum class OverlapPolicy {
  Throw,
  /// Single-node value μ^{zL}/(zL), as if the graph were primitive.
  Primitive,
  /// forest_toy_rules.
  ForestSum,
};

/// Nested toy rules on every generator, with optional per-graph overrides.
inline Character toy_character(bool with_mu, int order,
                               OverlapPolicy overlaps = OverlapPolicy::Throw,
                               std::unordered_map<GraphId, Laurent> overrides = {}) {
  return Character::of([=](GraphId g) {
    auto it = overrides.find(g);
    if (it != overrides.end()) return it->second;
    const FeynGraph& G = info(g).graph;
    if (overlaps == OverlapPolicy::ForestSum) return forest_toy_rules(G, with_mu, order);
    try {
      return nested_toy_rules(G, with_mu, order);
    } catch (const OverlapError&) {
      if (overlaps == OverlapPolicy::Throw) {
        throw OverlapError("overlapping divergences in " + info(g).hash +
                           "; supply a value for this graph");
      }
    }
    const int L = loop_number(G);
    Poly a = with_mu ? Poly::var(Var::Ell, 1, Q(L)) : Poly();
    return Laurent::monomial(-1, Poly(make_q(1, L))) * Laurent::exp_z(a, order + 1);
  });
}

/// Overrides from {"rules":[{"graph":hash,"series":[{"z","coeff","l_deg","t_deg"}]}]}.
/// Graphs must already be interned.
inline std::unordered_map<GraphId, Laurent> parse_rule_overrides(const json& j) {
  std::unordered_map<GraphId, Laurent> out;
  const json& rules = detail::require(j, "rules");
  if (!rules.is_array()) throw GraphError("'rules' must be an array");
  for (const auto& r : rules) {
    const std::string h = detail::require_string(r, "graph");
    auto id = registry().find_hash(h);
    if (!id) throw GraphError("unknown graph hash " + h);
    Laurent s;
    for (const auto& t : detail::require(r, "series")) {
      int z = detail::require(t, "z").get<int>();
      Q c = parse_q(detail::require_string(t, "coeff"));
      int ld = t.value("l_deg", 0);
      int td = t.value("t_deg", 0);
      s += Laurent::monomial(z, Poly::var(Var::Ell, ld) * Poly::var(Var::T, td, c));
    }
    out[*id] = s;
  }
  return out;
}

// Slavnov–Taylor compatible characters.

class SingularPivotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StSolution {
  Character character;
  std::vector<GraphId> pivots;
};

/// Adjusts `seed` on one pivot graph per ST generator (d5-split equivalent
/// family) so that every generator of the window evaluates to zero.  Loop
/// orders are solved in increasing order; within a (loop, d5) block the
/// pivots solve a small linear system.  The pivot of the generator for v_i
/// is the canonically largest graph of residue v_i in it, or failing that
/// the largest graph not yet used.
inline StSolution st_character(const Character& seed, const TruncationSpec& w) {
  auto gens = st_ideal_generators(w, StFamily::Equivalent, true);
  std::map<std::pair<int, int>, std::vector<const StGenerator*>> blocks;
  for (const auto& g : gens) blocks[{g.loops, g.d5}].push_back(&g);

  std::unordered_map<GraphId, Laurent> solved;
  auto value = [&](const Monomial& m) {
    Laurent r(1);
    for (GraphId g : m) {
      auto it = solved.find(g);
      r *= it != solved.end() ? it->second : seed(g);
    }
    return r;
  };
  StSolution out;
  for (const auto& [bigrade, block] : blocks) {
    std::vector<GraphId> pivots;
    for (const StGenerator* g : block) {
      std::vector<GraphId> linear;
      for (const auto& [m, c] : g->element.terms()) {
        if (m.size() == 1 && !is_zero(c)) linear.push_back(m[0]);
      }
      std::sort(linear.begin(), linear.end(), generator_less);
      auto unused = [&](GraphId x) {
        return std::find(pivots.begin(), pivots.end(), x) == pivots.end();
      };
      std::optional<GraphId> pick;
      const Residue want = static_cast<VertexKind>(g->vertex);
      for (auto it = linear.rbegin(); it != linear.rend() && !pick; ++it) {
        if (info(*it).residue == want && unused(*it)) pick = *it;
      }
      for (auto it = linear.rbegin(); it != linear.rend() && !pick; ++it) {
        if (unused(*it)) pick = *it;
      }
      if (!pick) throw SingularPivotError("no pivot available for " + g->label);
      pivots.push_back(*pick);
    }
    const std::size_t n = block.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    std::vector<Laurent> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [m, c] : block[i]->element.terms()) {
        auto p = m.size() == 1 ? std::find(pivots.begin(), pivots.end(), m[0]) : pivots.end();
        if (p != pivots.end()) a[i][p - pivots.begin()] += c;
        else rhs[i] -= value(m) * Laurent(c);
      }
    }
    // Columns of A^{-1} applied to the Laurent right-hand side.
    std::vector<Laurent> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Q> e(n, Q(0));
      e[i] = 1;
      auto col = solve_dense(a, e);
      if (!col) {
        std::string labels;
        for (const auto* g : block) labels += (labels.empty() ? "" : ", ") + g->label;
        throw SingularPivotError("singular pivot coefficients for " + labels);
      }
      for (std::size_t j = 0; j < n; ++j) x[j] += rhs[i] * Laurent((*col)[j]);
    }
    for (std::size_t j = 0; j < n; ++j) {
      solved[pivots[j]] = x[j];
      out.pivots.push_back(pivots[j]);
    }
  }
  out.character = with_overrides(seed, std::move(solved));
  return out;
}

// Renormalization-group flow.

class PoleCancellationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F_t(x) = lim_{z→0} (γ_- ⋆ θ_{tz}(γ_-∘S))(x) with θ_{tz} multiplying a
/// monomial by exp(tz·L).  Returns the z⁰ coefficient after checking that
/// every pole cancels.
inline Poly rg_flow(const Character& minus, const Monomial& x) {
  int loops = 0;
  for (GraphId g : x) loops += info(g).loops;
  const int order = loops + 1;
  Laurent f;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    int l2 = 0;
    for (GraphId g : k.second) l2 += info(g).loops;
    Laurent theta = Laurent::exp_z(Poly::var(Var::T, 1, Q(l2)), order);
    f += minus(k.first) * theta * minus(antipode(k.second)) * Laurent(c);
  }
  for (const auto& [z, p] : f.terms()) {
    if (z < 0) {
      throw PoleCancellationError("pole z^" + std::to_string(z) + " survives in F_t: " +
                                  p.str());
    }
  }
  return f.coeff(0);
}

inline Poly rg_flow(const Character& minus, const HopfElement& x) {
  Poly r;
  for (const auto& [m, c] : x.terms()) r += rg_flow(minus, m) * Poly(c);
  return r;
}

/// F_t as a character with constant-in-z values.
inline Character rg_character(const Character& minus) {
  return Character::of([minus](GraphId g) { return Laurent(rg_flow(minus, Monomial{g})); });
}

/// β(x) = d/dt F_t(x) at t = 0.
inline Poly beta_poly(const Character& minus, const HopfElement& x) {
  return rg_flow(minus, x).coefficient(Var::T, 1);
}

inline Q beta_element(const Character& minus, const HopfElement& x) {
  Poly b = beta_poly(minus, x);
  if (!b.is_constant()) throw std::domain_error("beta depends on the mass scale: " + b.str());
  return b.constant();
}

}  // namespace qcdhopf

#endif  // QCDHOPF_RENORM_HPP
