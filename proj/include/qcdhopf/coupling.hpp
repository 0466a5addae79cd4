#ifndef QCDHOPF_COUPLING_HPP
#define QCDHOPF_COUPLING_HPP

// Couplings λ1..λ5 and field markers φ1..φ3 (φ_i belongs to edge kind e_i):
// the coaction of H, the action of characters as formal diffeomorphisms
// with wave-function factors, the ideal I and running couplings.

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "green.hpp"
#include "hopf.hpp"
#include "polynomial.hpp"
#include "renorm.hpp"

namespace qcdhopf {

/// Exponents of λ1..λ5 followed by φ1..φ3.
using FKey = std::array<int, 8>;

inline FKey lambda_key(int j, int power = 1) {
  FKey k{};
  k[j - 1] = power;
  return k;
}
inline FKey field_key(int i, int power = 1) {
  FKey k{};
  k[4 + i] = power;
  return k;
}
inline FKey operator+(FKey a, const FKey& b) {
  for (int i = 0; i < 8; ++i) a[i] += b[i];
  return a;
}
inline FKey operator-(FKey a, const FKey& b) {
  for (int i = 0; i < 8; ++i) a[i] -= b[i];
  return a;
}

/// λ-part of a multidegree.
inline FKey degree_key(const Multidegree& n) {
  FKey k{};
  for (int j = 0; j < 5; ++j) k[j] = n[j];
  return k;
}

/// Grade of a relative λ-exponent: Σ n_k(N(v_k)−2) = 2·loops, d5 = n5.
inline std::optional<Grade> lambda_grade(const FKey& n) {
  int weight = 0;
  for (int j = 0; j < 5; ++j) weight += n[j] * (valence(static_cast<VertexKind>(j + 1)) - 2);
  if (weight % 2 != 0) return std::nullopt;
  Grade g;
  g.loops = weight / 2;
  g.d5 = n[4];
  for (int j = 0; j < 5; ++j) g.degree[j] = n[j];
  return g;
}

inline bool fits(const FKey& rel, const TruncationSpec& w) {
  auto g = lambda_grade(rel);
  return g && g->loops >= 0 && g->loops + g->d5 >= 0 && w.contains(*g);
}

/// Polynomial in λ and φ with Q[ℓ,t,s] coefficients.
class LambdaSeries {
 public:
  LambdaSeries() = default;
  LambdaSeries(const Poly& c) {  // NOLINT
    add(FKey{}, c);
  }
  LambdaSeries(long c) : LambdaSeries(Poly(c)) {}  // NOLINT

  static LambdaSeries monomial(const FKey& k, const Poly& c = Poly(1)) {
    LambdaSeries r;
    r.add(k, c);
    return r;
  }
  static LambdaSeries lambda(int j, int power = 1) { return monomial(lambda_key(j, power)); }
  static LambdaSeries field(int i, int power = 1) { return monomial(field_key(i, power)); }

  const std::map<FKey, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const FKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Poly() : it->second;
  }

  void add(const FKey& k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LambdaSeries map_coeffs(const std::function<Poly(const Poly&)>& f) const {
    LambdaSeries r;
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

  LambdaSeries& operator+=(const LambdaSeries& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LambdaSeries& operator-=(const LambdaSeries& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
  friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
    LambdaSeries r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
    }
    return r;
  }
  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<FKey, Poly> terms_;
};

/// Product with terms kept only while their exponent, read as a relative
/// grade, fits the window.
inline LambdaSeries mul_rel(const LambdaSeries& a, const LambdaSeries& b,
                            const TruncationSpec& w) {
  LambdaSeries r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      FKey k = ka + kb;
      if (fits(k, w)) r.add(k, ca * cb);
    }
  }
  return r;
}

inline LambdaSeries pow_rel(const LambdaSeries& x, int n, const TruncationSpec& w) {
  LambdaSeries r(1);
  for (int i = 0; i < n; ++i) r = mul_rel(r, x, w);
  return r;
}

inline std::string key_string(const FKey& k) {
  static const char* names[8] = {"l1", "l2", "l3", "l4", "l5", "phi1", "phi2", "phi3"};
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (k[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (k[i] != 1) s += "^" + std::to_string(k[i]);
  }
  return s.empty() ? "1" : s;
}

/// The ideal I in its equivalent form: λ_i ↦ g^{N(v_i)−2} with g = λ1.
inline LambdaSeries reduce_mod_I(const LambdaSeries& x) {
  LambdaSeries r;
  for (const auto& [k, c] : x.terms()) {
    FKey n = k;
    for (int i = 2; i <= 4; ++i) {
      n[0] += n[i - 1] * (valence(static_cast<VertexKind>(i)) - 2);
      n[i - 1] = 0;
    }
    r.add(n, c);
  }
  return r;
}

// Coaction.

/// Element of F ⊗ H with rational coefficients.
class CoactionElement {
 public:
  using Key = std::pair<FKey, Monomial>;

  const std::map<Key, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FKey& k, const Monomial& m, const Q& c) {
    if (is_zero_q(c)) return;
    auto [it, fresh] = terms_.try_emplace({k, m}, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_q(it->second)) terms_.erase(it);
    }
  }

  CoactionElement& operator+=(const CoactionElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  CoactionElement& operator-=(const CoactionElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }

  /// Hopf leg of the terms with λφ-part k.
  HopfElement hopf_part(const FKey& k) const {
    HopfElement h;
    for (auto it = terms_.lower_bound({k, Monomial{}}); it != terms_.end() && it->first.first == k;
         ++it) {
      h.add(it->first.second, it->second);
    }
    return h;
  }

  std::vector<FKey> keys() const {
    std::vector<FKey> out;
    for (const auto& [k, c] : terms_) {
      if (out.empty() || out.back() != k.first) out.push_back(k.first);
    }
    return out;
  }

 private:
  static bool is_zero_q(const Q& c) { return qcdhopf::is_zero(c); }
  std::map<Key, Q> terms_;
};

inline CoactionElement coaction_mul(const CoactionElement& a, const CoactionElement& b,
                                    const TruncationSpec& w) {
  CoactionElement r;
  for (const auto& [ka, ca] : a.terms()) {
    const Grade ga = grade(ka.second);
    for (const auto& [kb, cb] : b.terms()) {
      Grade g = ga;
      g += grade(kb.second);
      if (!w.contains(g)) continue;
      r.add(ka.first + kb.first, mono_mul(ka.second, kb.second), ca * cb);
    }
  }
  return r;
}

/// √G^{e_i}.
inline HopfElement sqrt_green(EdgeKind e, const TruncationSpec& w) {
  return series_power(green_function(e, w), make_q(1, 2), w);
}

/// Hopf element paired with generator `index` of F: 0..4 for λ1..λ5 (Y_v),
/// 5..7 for φ1..φ3 (√G^e).
inline HopfElement coaction_series(int index, const TruncationSpec& w) {
  if (index < 5) return y_power(static_cast<VertexKind>(index + 1), 1, w);
  return truncate(sqrt_green(static_cast<EdgeKind>(index - 4), w), w);
}

/// ρ on one generator: Σ_n x·λ^n ⊗ p_n(series).
inline const CoactionElement& coact_generator(int index, const TruncationSpec& w) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, CoactionElement> cache;
  auto key = std::tuple(index, w.max_loops, w.max_v5);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  FKey base{};
  base[index] = 1;
  CoactionElement r;
  const HopfElement series = coaction_series(index, w);
  for (const auto& [m, c] : series.terms()) {
    r.add(base + degree_key(grade(m).degree), m, c);
  }
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(r)).first->second;
}

/// ρ extended multiplicatively; coefficients of x must be rational.
inline CoactionElement coact(const LambdaSeries& x, const TruncationSpec& w) {
  CoactionElement out;
  for (const auto& [k, c] : x.terms()) {
    if (!c.is_constant()) throw std::domain_error("coact needs rational coefficients");
    CoactionElement term;
    term.add(FKey{}, Monomial{}, c.constant());
    for (int i = 0; i < 8; ++i) {
      if (k[i] < 0) throw std::domain_error("negative exponent in coact");
      for (int p = 0; p < k[i]; ++p) term = coaction_mul(term, coact_generator(i, w), w);
    }
    out += term;
  }
  return out;
}

/// λ_j Π_i φ_i^{N_i(v_j)}, the interaction monomial of v_j.
inline LambdaSeries interaction_monomial(VertexKind v) {
  FKey k = lambda_key(static_cast<int>(v));
  for (EdgeKind e : kAllEdgeKinds) k[4 + static_cast<int>(e)] = lines_of_kind(v, e);
  return LambdaSeries::monomial(k);
}

using Tensor3F = std::map<std::tuple<FKey, Monomial, Monomial>, Q>;

inline void add3f(Tensor3F& t, const FKey& k, const Monomial& a, const Monomial& b,
                  const Q& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = t.try_emplace({k, a, b}, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

/// (ρ⊗id)ρ(x) − (id⊗Δ)ρ(x).
inline Tensor3F comodule_residual(const LambdaSeries& x, const TruncationSpec& w) {
  Tensor3F out;
  const CoactionElement r = coact(x, w);
  for (const auto& [k, c] : r.terms()) {
    const CoactionElement inner =
        coact(LambdaSeries::monomial(k.first), w.minus(grade(k.second)));
    for (const auto& [k2, c2] : inner.terms()) add3f(out, k2.first, k2.second, k.second, c * c2);
    const TensorElement d = coproduct(k.second);
    for (const auto& [k3, c3] : d.terms()) add3f(out, k.first, k3.first, k3.second, -c * c3);
  }
  return out;
}

/// Image of ρ(x) in (F/I) ⊗ (H/J), keyed by the reduced λφ-part.
inline std::map<FKey, HopfElement> coaction_mod_ideals(const LambdaSeries& x,
                                                       const IdealBasis& j) {
  const CoactionElement r = coact(x, j.basis().spec());
  std::map<FKey, HopfElement> grouped;
  for (const auto& [k, c] : r.terms()) {
    LambdaSeries red = reduce_mod_I(LambdaSeries::monomial(k.first));
    grouped[red.terms().begin()->first].add(k.second, c);
  }
  std::map<FKey, HopfElement> out;
  for (auto& [k, h] : grouped) {
    HopfElement nf = j.normal_form(h);
    if (!nf.is_zero()) out.emplace(k, std::move(nf));
  }
  return out;
}

/// λ_i − g^{N(v_i)−2}, i = 2, 3, 4.
inline LambdaSeries ideal_generator(int i) {
  return LambdaSeries::lambda(i) -
         LambdaSeries::lambda(1, valence(static_cast<VertexKind>(i)) - 2);
}

// Action of characters.

/// Scalar character on monomials (typically the z⁰ part of γ_+).
using ScalarCharacter = std::function<Poly(const Monomial&)>;

inline ScalarCharacter at_z0(const Character& c) {
  return [c](const Monomial& m) { return c(m).coeff(0); };
}

/// Element of G′: f(λ_j) = λ_j·R_j(λ), f(φ_i) = φ_i·U_i(λ), R_j and U_i
/// stored as relative series with constant term 1.
struct Action {
  std::array<LambdaSeries, 5> lambda;
  std::array<LambdaSeries, 3> field;
  TruncationSpec window;

  const LambdaSeries& rel(int index) const {
    return index < 5 ? lambda[index] : field[index - 5];
  }

  static Action identity(const TruncationSpec& w) {
    Action a;
    for (auto& s : a.lambda) s = LambdaSeries(1);
    for (auto& s : a.field) s = LambdaSeries(1);
    a.window = w;
    return a;
  }
};

/// f^{v_j}_n = χ(p_n(Y_{v_j})), f^{e_i}_n = χ(p_n(√G^{e_i})).
inline Action character_action(const ScalarCharacter& chi, const TruncationSpec& w) {
  Action a;
  a.window = w;
  for (int index = 0; index < 8; ++index) {
    LambdaSeries s;
    const HopfElement series = coaction_series(index, w);
    for (const auto& [m, c] : series.terms()) {
      s.add(degree_key(grade(m).degree), chi(m) * Poly(c));
    }
    (index < 5 ? a.lambda[index] : a.field[index - 5]) = s;
  }
  return a;
}

/// f(x) with every term's growth relative to `base` kept inside the window.
/// Without a base each term of x is its own base.
inline LambdaSeries apply(const Action& f, const LambdaSeries& x,
                          std::optional<FKey> base = std::nullopt) {
  LambdaSeries out;
  for (const auto& [k, c] : x.terms()) {
    TruncationSpec w = f.window;
    if (base) {
      auto g = lambda_grade(k - *base);
      if (!g || !fits(k - *base, f.window)) continue;
      w = w.minus(*g);
    }
    LambdaSeries r(c);
    for (int i = 0; i < 8; ++i) {
      if (k[i] < 0) throw std::domain_error("negative exponent in apply");
      r = mul_rel(r, pow_rel(f.rel(i), k[i], w), w);
    }
    for (const auto& [n, cn] : r.terms()) out.add(k + n, cn);
  }
  return out;
}

/// (f∘h)(x) = f(h(x)).
inline Action compose(const Action& f, const Action& h) {
  Action a;
  a.window = f.window;
  for (int index = 0; index < 8; ++index) {
    FKey base{};
    base[index] = 1;
    LambdaSeries hx = LambdaSeries::monomial(base) * h.rel(index);
    LambdaSeries fhx = apply(f, hx, base);
    LambdaSeries s;
    for (const auto& [k, c] : fhx.terms()) s.add(k - base, c);
    (index < 5 ? a.lambda[index] : a.field[index - 5]) = s;
  }
  return a;
}

inline bool operator==(const Action& a, const Action& b) {
  return a.lambda == b.lambda && a.field == b.field;
}

/// Composition order realizing the group law: the action of φ⋆ψ equals
/// f_φ∘f_ψ, i.e. f_ψ is applied first.  Verified by the test suite.
inline Action action_of_product(const Action& f_phi, const Action& f_psi) {
  return compose(f_phi, f_psi);
}

struct SemidirectSplit {
  std::array<LambdaSeries, 3> wave;  // U_i
  Action diffeo;                     // d: λ_j ↦ λ_j R_j, φ_i fixed
  Action wave_action;                // n: λ_j fixed, φ_i ↦ φ_i U_i
};

/// f = n∘d with n ∈ N and d ∈ Diff(C^5, 0).
inline SemidirectSplit split_semidirect(const Action& f) {
  for (int index = 0; index < 8; ++index) {
    if (f.rel(index).coeff(FKey{}) != Poly(1)) {
      throw std::domain_error("constant term of generator " + std::to_string(index) +
                              " is not 1");
    }
  }
  SemidirectSplit s;
  s.diffeo = Action::identity(f.window);
  s.wave_action = Action::identity(f.window);
  s.diffeo.lambda = f.lambda;
  s.wave_action.field = f.field;
  s.wave = f.field;
  return s;
}

inline Action recompose(const SemidirectSplit& s) { return compose(s.wave_action, s.diffeo); }

// G^I and the Slavnov–Taylor identities.

struct PreservesIWitness {
  int vertex = 0;  // i of λ_i − g^{N(v_i)−2}
  int loops = 0;   // l in g^{2l+N(v_i)−2}
  int d5 = 0;      // λ5 exponent
  Poly value;
};

/// f(I) ⊆ I: reduce_mod_I(f(λ_i − g^{N(v_i)−2})) = 0 for i = 2, 3, 4.
inline std::vector<PreservesIWitness> preserves_I_check(const Action& f) {
  std::vector<PreservesIWitness> out;
  for (int i = 2; i <= 4; ++i) {
    const int n = valence(static_cast<VertexKind>(i)) - 2;
    LambdaSeries r = reduce_mod_I(apply(f, ideal_generator(i)));
    for (const auto& [k, c] : r.terms()) {
      out.push_back({i, (k[0] - n) / 2, k[4], c});
    }
  }
  return out;
}

// Running couplings and β.

inline LambdaSeries d_dl_at_zero(const LambdaSeries& x) {
  return x.map_coeffs(
      [](const Poly& p) { return p.derivative(Var::Ell).substitute(Var::Ell, Poly()); });
}

struct RunningCouplings {
  Action action;                          // γ_{μ,+}(0) acting on F
  std::array<LambdaSeries, 5> coupling;  // λ_i(μ)
  std::array<LambdaSeries, 5> beta;      // μ∂_μ λ_i(μ) at ℓ = 0
};

/// λ_i(μ) = γ_{μ,+}(0)(λ_i) and β(λ_i) = d/dℓ λ_i(μ) at ℓ = 0.
inline RunningCouplings running_couplings(const BirkhoffPair& pair, const TruncationSpec& w) {
  RunningCouplings rc;
  rc.action = character_action(at_z0(pair.plus), w);
  for (int j = 1; j <= 5; ++j) {
    rc.coupling[j - 1] = apply(rc.action, LambdaSeries::lambda(j));
    rc.beta[j - 1] = d_dl_at_zero(rc.coupling[j - 1]);
  }
  return rc;
}

/// β(g^n) for g = λ1.
inline LambdaSeries beta_of_g_power(const RunningCouplings& rc, int n) {
  return d_dl_at_zero(apply(rc.action, LambdaSeries::lambda(1, n)));
}

/// reduce_mod_I(β(λ_i) − β(g^{N(v_i)−2})) for i = 1..4.
inline std::array<LambdaSeries, 4> beta_identity_residuals(const RunningCouplings& rc) {
  std::array<LambdaSeries, 4> out;
  for (int i = 1; i <= 4; ++i) {
    int n = valence(static_cast<VertexKind>(i)) - 2;
    out[i - 1] = reduce_mod_I(rc.beta[i - 1] - beta_of_g_power(rc, n));
  }
  return out;
}

// The action functional, term by term.

struct ActionTerm {
  int term = 0;          // 1..8 in the order of the action
  std::string label;     // field monomial
  Q prefactor;           // rational factor in front of the λ
  int lambda = 0;        // 0 when the monomial carries no coupling
  LambdaSeries beta;     // prefactor·β(λ_lambda)
};

inline std::vector<ActionTerm> action_terms() {
  return {
      {1, "<dA,dA>", Q(-1), 0, {}},
      {2, "<dA,A^2>", Q(-2), 3, {}},
      {3, "<A^2,A^2>", Q(-1), 4, {}},
      {4, "<psi,dslash psi>", Q(1), 0, {}},
      {4, "<psi,Aslash psi>", Q(1), 1, {}},
      {4, "<psi,psi>", Q(1), 5, {}},
      {5, "<A,dh>", Q(-1), 0, {}},
      {6, "<d omegabar,d omega>", Q(1), 0, {}},
      {7, "<h,h>", make_q(1, 2), 0, {}},
      {8, "<d omegabar,[A,omega]>", Q(1), 2, {}},
  };
}

/// β extended linearly to the action: every monomial with its coupling's
/// β rescaled by the prefactor.  The ξ in ½ξ⟨h,h⟩ is not a coupling.
inline std::vector<ActionTerm> beta_on_action(const std::array<LambdaSeries, 5>& betas) {
  std::vector<ActionTerm> out = action_terms();
  for (auto& t : out) {
    if (t.lambda == 0) continue;
    t.beta = betas[t.lambda - 1].map_coeffs([&](const Poly& p) { return p * Poly(t.prefactor); });
  }
  return out;
}

// Faà di Bruno form of the coproduct.

/// Series in x1..x5 with coefficients in H; exponents are relative grades.
using HSeries = std::map<FKey, HopfElement>;

inline HSeries hseries_mul(const HSeries& a, const HSeries& b, const TruncationSpec& w) {
  HSeries r;
  for (const auto& [ka, ha] : a) {
    for (const auto& [kb, hb] : b) {
      FKey k = ka + kb;
      if (!fits(k, w)) continue;
      HopfElement p = multiply(ha, hb, w);
      if (p.is_zero()) continue;
      r[k] += p;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

/// Inverse of a series with constant term 1, by the geometric series.
inline HSeries hseries_inverse(const HSeries& a, const TruncationSpec& w) {
  HSeries u = a;
  u[FKey{}] -= HopfElement::one();
  std::erase_if(u, [](const auto& kv) { return kv.second.is_zero(); });
  HSeries r{{FKey{}, HopfElement::one()}};
  HSeries power = r;
  for (int k = 1; k <= 2 * w.weight_bound() + 1; ++k) {
    power = hseries_mul(power, u, w);
    if (power.empty()) break;
    for (const auto& [key, h] : power) {
      HopfElement t = h;
      if (k % 2 == 1) t *= Q(-1);
      r[key] += t;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

/// Δ(a^{(j)}_m) read off Δ(A_j(x)) = Σ_n A_j(x)Π_k A_k(x)^{n_k} ⊗ a^{(j)}_n
/// with a^{(k)}_n ↦ p_n(Y_{v_k}), minus the Hopf coproduct of p_m(Y_{v_j}).
inline TensorElement faa_di_bruno_residual(int j, const TruncationSpec& w) {
  std::array<HSeries, 5> A;  // A_k(x)/x_k
  std::array<HSeries, 5> Ainv;
  for (int k = 0; k < 5; ++k) {
    const HopfElement series = coaction_series(k, w);
    for (const auto& [m, c] : series.terms()) {
      A[k][degree_key(grade(m).degree)].add(m, c);
    }
    Ainv[k] = hseries_inverse(A[k], w);
  }
  std::map<FKey, HopfElement> pm;  // p_m(Y_{v_j})
  const HopfElement yj = coaction_series(j - 1, w);
  for (const auto& [m, c] : yj.terms()) {
    pm[degree_key(grade(m).degree)].add(m, c);
  }
  TensorElement res;
  for (const auto& [n, right] : pm) {
    // A_j(x)·Π_k A_k(x)^{n_k}: the x_k prefactors give x^n, which is
    // absorbed by reading coefficients at relative exponent m − n.
    HSeries prod = A[j - 1];
    for (int k = 0; k < 5; ++k) {
      const HSeries& f = n[k] >= 0 ? A[k] : Ainv[k];
      for (int p = 0; p < std::abs(n[k]); ++p) prod = hseries_mul(prod, f, w);
    }
    for (const auto& [rel, left] : prod) {
      FKey m = rel + n;
      if (!fits(m, w)) continue;
      res.add(tensor(left, right));
    }
  }
  for (const auto& [m, h] : pm) {
    res -= coproduct(h);
  }
  return res;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_COUPLING_HPP
