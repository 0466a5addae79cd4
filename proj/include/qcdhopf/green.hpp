#ifndef QCDHOPF_GREEN_HPP
#define QCDHOPF_GREEN_HPP

// Green's functions, their rational powers, the effective couplings Y_v and
// the Slavnov–Taylor ideal J inside a truncation window.

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "enumerate.hpp"
#include "hopf.hpp"
#include "linalg.hpp"

namespace qcdhopf {

struct LabeledTerm {
  GraphId id;
  std::uint64_t symmetry;
};

namespace detail {

inline int residue_index(const Residue& r) {
  if (std::holds_alternative<EdgeKind>(r)) return static_cast<int>(std::get<EdgeKind>(r));
  return 10 + static_cast<int>(std::get<VertexKind>(r));
}

inline bool is_mass_residue(const Residue& r) {
  return std::holds_alternative<VertexKind>(r) && std::get<VertexKind>(r) == VertexKind::V5;
}

/// Enumerated graphs with their symmetry factors, memoized per cell.
inline const std::vector<LabeledTerm>& labeled_terms(const Residue& r, int loops,
                                                     int max_v5) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<LabeledTerm>> cache;
  auto key = std::tuple(residue_index(r), loops, max_v5);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<LabeledTerm> terms;
  for (const auto& g : enumerate_graphs(r, loops, max_v5)) {
    terms.push_back({intern(g), symmetry_factor(g)});
  }
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(terms)).first->second;
}

}  // namespace detail

/// Leg-labeled graphs of residue r and loop number l that fit the window.
inline std::vector<LabeledTerm> window_terms(const Residue& r, int l,
                                             const TruncationSpec& w) {
  int max_v5 = w.weight_bound() - l + (detail::is_mass_residue(r) ? 1 : 0);
  std::vector<LabeledTerm> out;
  if (l < 1 || l > w.max_loops || max_v5 < 0) return out;
  for (const auto& t : detail::labeled_terms(r, l, max_v5)) {
    if (w.contains(grade(t.id))) out.push_back(t);
  }
  return out;
}

/// G^r = 1 ∓ Σ Γ/Sym(Γ): minus for propagators, plus for vertices.
inline HopfElement green_function(const Residue& r, const TruncationSpec& w) {
  HopfElement x = HopfElement::one();
  Q sign = std::holds_alternative<EdgeKind>(r) ? Q(-1) : Q(1);
  for (int l = 1; l <= w.max_loops; ++l) {
    for (const auto& t : window_terms(r, l, w)) {
      x.add(Monomial{t.id}, sign / Q(static_cast<unsigned long>(t.symmetry)));
    }
  }
  return x;
}

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (1 + u)^α = Σ_k binom(α, k) u^k, truncated to w.
inline HopfElement series_power(const HopfElement& x, const Q& alpha,
                                const TruncationSpec& w) {
  if (counit(x) != 1) throw SeriesError("series_power: constant term must be 1");
  for (const auto& [m, c] : x.terms()) {
    if (!m.empty() && grade(m).loops == 0) {
      throw SeriesError("series_power: loop-free nonconstant term");
    }
  }
  HopfElement u = truncate(x, w) - HopfElement::one();
  HopfElement result = HopfElement::one();
  HopfElement power = HopfElement::one();
  for (int k = 1; k <= w.max_loops; ++k) {
    power = multiply(power, u, w);
    if (power.is_zero()) break;
    result += power * binomial(alpha, k);
  }
  return result;
}

/// Y_v = G^v / Π_i (G^{e_i})^{N_i(v)/2}.
inline HopfElement y_element(VertexKind v, const TruncationSpec& w) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, HopfElement> cache;
  auto key = std::tuple(static_cast<int>(v), w.max_loops, w.max_v5);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  HopfElement y = green_function(v, w);
  for (EdgeKind e : kAllEdgeKinds) {
    int n = lines_of_kind(v, e);
    if (n == 0) continue;
    y = multiply(y, series_power(green_function(e, w), make_q(-n, 2), w), w);
  }
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(y)).first->second;
}

inline HopfElement y_power(VertexKind v, int n, const TruncationSpec& w) {
  if (n == 0) return HopfElement::one();
  HopfElement y = truncate(y_element(v, w), w);
  if (n == 1) return y;
  return series_power(y, Q(n), w);
}

// Slavnov–Taylor generators.

enum class StFamily {
  /// q_l(Y_k^{N(v_j)−2} − Y_j^{N(v_k)−2}) for 1 ≤ j < k ≤ 4.
  Pairwise,
  /// q_l(Y_i − Y_1^{N(v_i)−2}) for i = 2, 3, 4.
  Equivalent,
};

struct StGenerator {
  std::string label;
  HopfElement element;
  int loops = 0;
  int d5 = 0;      // meaningful only when split by d5
  int vertex = 0;  // i for the Equivalent family, k for Pairwise
};

/// The generators projected to each loop order 1..L; with split_d5 every
/// generator is further split into its homogeneous d5 components.
inline std::vector<StGenerator> st_ideal_generators(const TruncationSpec& w,
                                                    StFamily family,
                                                    bool split_d5 = false) {
  std::vector<std::tuple<std::string, HopfElement, int>> raw;
  auto N = [](int j) { return valence(static_cast<VertexKind>(j)) - 2; };
  auto Y = [&](int j, int n) { return y_power(static_cast<VertexKind>(j), n, w); };
  if (family == StFamily::Pairwise) {
    for (int j = 1; j <= 4; ++j) {
      for (int k = j + 1; k <= 4; ++k) {
        raw.emplace_back("Y" + std::to_string(k) + "^" + std::to_string(N(j)) + "-Y" +
                             std::to_string(j) + "^" + std::to_string(N(k)),
                         Y(k, N(j)) - Y(j, N(k)), k);
      }
    }
  } else {
    for (int i = 2; i <= 4; ++i) {
      raw.emplace_back("Y" + std::to_string(i) + "-Y1^" + std::to_string(N(i)),
                       Y(i, 1) - Y(1, N(i)), i);
    }
  }
  std::vector<StGenerator> out;
  for (int l = 1; l <= w.max_loops; ++l) {
    for (const auto& [label, x, v] : raw) {
      HopfElement q = project_loops(x, l);
      if (!split_d5) {
        if (!q.is_zero()) out.push_back({"q" + std::to_string(l) + "(" + label + ")", q, l, 0, v});
        continue;
      }
      for (int k = -l; k <= w.weight_bound(); ++k) {
        HopfElement p = project_bigrade(x, l, k);
        if (p.is_zero()) continue;
        out.push_back({"q" + std::to_string(l) + ",d5=" + std::to_string(k) + "(" + label + ")",
                       p, l, k, v});
      }
    }
  }
  return out;
}

// Window bases and ideals.

/// All generators (legs interchangeable) whose grade fits the window, in
/// (loops, key) order.
inline std::vector<GraphId> window_generators(const TruncationSpec& w) {
  std::vector<GraphId> ids;
  for (const auto& r : all_residues()) {
    for (int l = 1; l <= w.max_loops; ++l) {
      for (const auto& t : window_terms(r, l, w)) ids.push_back(t.id);
    }
  }
  std::sort(ids.begin(), ids.end(), generator_less);
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

/// Monomial basis of the window, sorted by (loops, generator order).
class WindowBasis {
 public:
  explicit WindowBasis(const TruncationSpec& w) : w_(w) {
    gens_ = window_generators(w);
    for (std::size_t i = 0; i < gens_.size(); ++i) rank_[gens_[i]] = static_cast<int>(i);
    Monomial cur;
    grow(cur, 0, Grade{});
    std::vector<std::pair<std::vector<int>, Monomial>> keyed;
    for (auto& m : monos_) keyed.emplace_back(sort_key(m), std::move(m));
    std::sort(keyed.begin(), keyed.end());
    monos_.clear();
    for (auto& [k, m] : keyed) {
      index_.emplace(m, static_cast<int>(monos_.size()));
      monos_.push_back(std::move(m));
    }
  }

  const TruncationSpec& spec() const { return w_; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const std::vector<GraphId>& generators() const { return gens_; }
  std::size_t size() const { return monos_.size(); }

  std::optional<int> index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  SparseVec vec(const HopfElement& x) const {
    SparseVec v;
    for (const auto& [m, c] : x.terms()) {
      auto i = index(m);
      if (!i) throw SeriesError("monomial outside the truncation window");
      v.emplace(*i, c);
    }
    return v;
  }

  HopfElement element(const SparseVec& v) const {
    HopfElement x;
    for (const auto& [i, c] : v) x.add(monos_[i], c);
    return x;
  }

 private:
  std::vector<int> sort_key(const Monomial& m) const {
    std::vector<int> k{grade(m).loops};
    std::vector<int> r;
    for (GraphId g : m) r.push_back(rank_.at(g));
    std::sort(r.begin(), r.end());
    k.insert(k.end(), r.begin(), r.end());
    return k;
  }

  void grow(Monomial& cur, std::size_t from, const Grade& g) {
    monos_.push_back(cur);
    for (std::size_t i = from; i < gens_.size(); ++i) {
      Grade next = g;
      next += grade(gens_[i]);
      if (!w_.contains(next)) continue;
      cur.push_back(gens_[i]);
      grow(cur, i, next);
      cur.pop_back();
    }
    std::sort(monos_.back().begin(), monos_.back().end());
  }

  TruncationSpec w_;
  std::vector<GraphId> gens_;
  std::unordered_map<GraphId, int> rank_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

/// Span of u·g (truncated to the window) for all window monomials u and
/// generators g, in row-echelon form.
class IdealBasis {
 public:
  IdealBasis(const WindowBasis& basis, std::vector<HopfElement> generators)
      : basis_(&basis), generators_(std::move(generators)) {
    const auto& w = basis.spec();
    for (const auto& g : generators_) {
      for (const auto& u : basis.monomials()) {
        HopfElement prod = multiply(HopfElement::monomial(u), g, w);
        if (!prod.is_zero()) echelon_.insert(basis.vec(prod));
      }
    }
  }

  /// π: normal form modulo the ideal; the result is supported on
  /// monomials that are not leading terms of the ideal.
  HopfElement normal_form(const HopfElement& x) const {
    return basis_->element(echelon_.reduce(basis_->vec(truncate(x, basis_->spec()))));
  }
  bool contains(const HopfElement& x) const { return normal_form(x).is_zero(); }
  std::size_t rank() const { return echelon_.rank(); }
  const WindowBasis& basis() const { return *basis_; }
  const std::vector<HopfElement>& generators() const { return generators_; }

 private:
  const WindowBasis* basis_;
  std::vector<HopfElement> generators_;
  RowEchelon echelon_;
};

struct IdealCheckFailure {
  std::string generator;
  Monomial right;            // complement monomial z with nonzero left part
  HopfElement left_residual;  // π(Σ_y b_yz L_y)
};

struct IdealCheckReport {
  bool pass = true;
  std::size_t basis_size = 0;
  std::size_t ideal_rank = 0;
  std::size_t generators = 0;
  std::vector<IdealCheckFailure> failures;
};

/// (π ⊗ π)Δx as a map from complement monomial z to the left factor.
inline std::map<int, HopfElement> quotient_coproduct(const IdealBasis& ideal,
                                                     const HopfElement& x) {
  const WindowBasis& basis = ideal.basis();
  std::unordered_map<Monomial, HopfElement, MonomialHash> by_right;
  const TensorElement d = coproduct(x);
  for (const auto& [k, c] : d.terms()) by_right[k.second].add(k.first, c);
  std::map<int, HopfElement> acc;
  for (const auto& [y, left] : by_right) {
    HopfElement py = ideal.normal_form(HopfElement::monomial(y));
    for (const auto& [z, b] : py.terms()) acc[*basis.index(z)] += left * b;
  }
  std::map<int, HopfElement> out;
  for (auto& [z, left] : acc) {
    HopfElement r = ideal.normal_form(left);
    if (!r.is_zero()) out.emplace(z, std::move(r));
  }
  return out;
}

/// Verifies (π ⊗ π)Δg = 0 for every generator of the ideal.
inline IdealCheckReport hopf_ideal_check(const IdealBasis& ideal,
                                         const std::vector<StGenerator>& gens) {
  IdealCheckReport rep;
  rep.basis_size = ideal.basis().size();
  rep.ideal_rank = ideal.rank();
  rep.generators = gens.size();
  for (const auto& g : gens) {
    for (const auto& [z, left] : quotient_coproduct(ideal, g.element)) {
      rep.pass = false;
      rep.failures.push_back({g.label, ideal.basis().monomials()[z], left});
    }
  }
  return rep;
}

inline std::vector<HopfElement> elements(const std::vector<StGenerator>& gens) {
  std::vector<HopfElement> out;
  for (const auto& g : gens) out.push_back(g.element);
  return out;
}

// The coproduct formula on Green's functions and on Y_v.

/// Σ_n x·Y_1^{n_1}⋯Y_5^{n_5} ⊗ p_n(x), each term truncated so that the
/// total grade stays in the window.
inline TensorElement green_coproduct_rhs(const HopfElement& x, const TruncationSpec& w) {
  TensorElement out;
  for (const auto& n : multidegrees(x)) {
    HopfElement right = project_degree(x, n);
    Grade gn;
    gn.loops = weighted_degree(n) / 2;
    gn.d5 = n[4];
    TruncationSpec rest = w.minus(gn);
    if (rest.max_loops < 0) continue;
    HopfElement left = truncate(x, rest);
    for (int j = 0; j < 5; ++j) {
      if (n[j] == 0) continue;
      left = multiply(left, y_power(kAllVertexKinds[j], n[j], rest), rest);
    }
    out.add(tensor(left, right));
  }
  return out;
}

/// Δ((G^r)^α) minus the series-algebra side; zero when the formula holds.
inline TensorElement green_coproduct_residual(const Residue& r, const Q& alpha,
                                              const TruncationSpec& w) {
  HopfElement x = series_power(green_function(r, w), alpha, w);
  return coproduct(x) - green_coproduct_rhs(x, w);
}

inline TensorElement y_coproduct_residual(VertexKind v, const TruncationSpec& w) {
  HopfElement x = truncate(y_element(v, w), w);
  return coproduct(x) - green_coproduct_rhs(x, w);
}

}  // namespace qcdhopf

#endif  // QCDHOPF_GREEN_HPP
