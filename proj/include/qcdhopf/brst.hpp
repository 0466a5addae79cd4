#ifndef QCDHOPF_BRST_HPP
#define QCDHOPF_BRST_HPP

// Component-level BRST differential in the constant-field sector (d = 0)
// over su(2) and su(3), with exact scalars in Q(√3, i).
//
// Conventions: anti-Hermitian generators T^a = −iσ^a/2 (su(2)) and
// T^a = −iλ^a/2 (su(3)), so [T^a, T^b] = f^{abc} T^c with real f and
// tr(T^a T^b) = −δ^{ab}/2.  The differential is a left odd derivation,
// s(xy) = s(x) y + (−1)^{deg x} x s(y).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadratic.hpp"

namespace qcdhopf {

enum class Species : int { A = 0, Omega = 1, OmegaBar = 2, H = 3, Psi = 4, PsiBar = 5 };

inline const char* species_name(Species s) {
  static const char* names[] = {"A", "w", "wb", "h", "psi", "psib"};
  return names[static_cast<int>(s)];
}

/// Degrees from the field table: (Grassmann, form, ghost, total).
struct Degrees {
  int grassmann = 0;
  int form = 0;
  int ghost = 0;
  int total = 0;
};

inline Degrees species_degrees(Species s) {
  switch (s) {
    case Species::A: return {0, 1, 0, 1};
    case Species::Omega: return {1, 0, 1, 1};
    case Species::OmegaBar: return {-1, 0, -1, -1};
    case Species::H: return {0, 0, 0, 0};
    case Species::Psi: return {1, 0, 0, 1};
    case Species::PsiBar: return {-1, 0, 0, -1};
  }
  return {};
}

inline std::string scalar_str(const Scalar& x) {
  auto q3 = [](const Q3& y) {
    if (is_zero(y.b)) return to_string(y.a);
    return "(" + to_string(y.a) + " + " + to_string(y.b) + "*sqrt3)";
  };
  if (is_zero(x.b)) return q3(x.a);
  if (is_zero(x.a)) return q3(x.b) + "*i";
  return "(" + q3(x.a) + " + " + q3(x.b) + "*i)";
}

// ---------------------------------------------------------------------------
// Color algebra

using ScalarMatrix = std::vector<std::vector<Scalar>>;

class ColorAlgebra {
 public:
  std::string name;
  int dim = 0;         // adjoint dimension
  int n = 0;           // fundamental dimension
  int lorentz = 2;     // number of Lorentz slots carried by A
  std::vector<Scalar> f_;
  std::vector<ScalarMatrix> T;
  Scalar trace_norm;   // tr(T^a T^a), no sum

  const Scalar& f(int a, int b, int c) const { return f_[(a * dim + b) * dim + c]; }

  static ColorAlgebra su2() {
    ColorAlgebra g = blank("su2", 3, 2);
    const Scalar half = scalar(make_q(1, 2));
    const Scalar i = imag_unit();
    // T^a = −iσ^a/2
    g.T[0] = {{0, -i * half}, {-i * half, 0}};
    g.T[1] = {{0, -half}, {half, 0}};
    g.T[2] = {{-i * half, 0}, {0, i * half}};
    g.set_f(0, 1, 2, Scalar(1));
    g.trace_norm = scalar(make_q(-1, 2));
    return g;
  }

  static ColorAlgebra su3() {
    ColorAlgebra g = blank("su3", 8, 3);
    const Scalar i = imag_unit();
    const Scalar one(1);
    std::vector<ScalarMatrix> lam(8, ScalarMatrix(3, std::vector<Scalar>(3)));
    lam[0][0][1] = one, lam[0][1][0] = one;
    lam[1][0][1] = -i, lam[1][1][0] = i;
    lam[2][0][0] = one, lam[2][1][1] = -one;
    lam[3][0][2] = one, lam[3][2][0] = one;
    lam[4][0][2] = -i, lam[4][2][0] = i;
    lam[5][1][2] = one, lam[5][2][1] = one;
    lam[6][1][2] = -i, lam[6][2][1] = i;
    // λ8 = diag(1, 1, −2)/√3 = diag(√3, √3, −2√3)/3
    const Scalar r = sqrt3() * scalar(make_q(1, 3));
    lam[7][0][0] = r, lam[7][1][1] = r, lam[7][2][2] = -(r + r);
    const Scalar c = -i * scalar(make_q(1, 2));
    for (int a = 0; a < 8; ++a) {
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) g.T[a][x][y] = c * lam[a][x][y];
      }
    }
    const Scalar h = scalar(make_q(1, 2));
    const Scalar s3 = sqrt3() * h;
    g.set_f(0, 1, 2, one);
    g.set_f(0, 3, 6, h);
    g.set_f(0, 4, 5, -h);
    g.set_f(1, 3, 5, h);
    g.set_f(1, 4, 6, h);
    g.set_f(2, 3, 4, h);
    g.set_f(2, 5, 6, -h);
    g.set_f(3, 4, 7, s3);
    g.set_f(5, 6, 7, s3);
    g.trace_norm = scalar(make_q(-1, 2));
    return g;
  }

  static ColorAlgebra by_name(const std::string& name) {
    if (name == "su2") return su2();
    if (name == "su3") return su3();
    throw std::invalid_argument("unknown color algebra: " + name);
  }

  bool f_antisymmetric() const {
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        for (int c = 0; c < dim; ++c) {
          const Scalar& x = f(a, b, c);
          if (!(f(b, a, c) == -x) || !(f(a, c, b) == -x)) return false;
        }
      }
    }
    return true;
  }

  /// Σ_e (f^{abe}f^{ecd} + f^{cbe}f^{aed} + f^{dbe}f^{ced}) = 0.
  bool f_jacobi() const {
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        for (int c = 0; c < dim; ++c) {
          for (int d = 0; d < dim; ++d) {
            Scalar s;
            for (int e = 0; e < dim; ++e) {
              s += f(a, b, e) * f(e, c, d) + f(c, b, e) * f(a, e, d) + f(d, b, e) * f(c, e, a);
            }
            if (!is_zero(s)) return false;
          }
        }
      }
    }
    return true;
  }

  /// [T^a, T^b] = f^{abc} T^c and tr(T^a T^b) = trace_norm δ^{ab}.
  bool generators_consistent() const {
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        ScalarMatrix ab = mul(T[a], T[b]), ba = mul(T[b], T[a]);
        Scalar tr;
        for (int x = 0; x < n; ++x) tr += ab[x][x];
        if (!(tr == (a == b ? trace_norm : Scalar()))) return false;
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            Scalar rhs;
            for (int c = 0; c < dim; ++c) rhs += f(a, b, c) * T[c][x][y];
            if (!(ab[x][y] - ba[x][y] == rhs)) return false;
          }
        }
      }
    }
    return true;
  }

 private:
  static ColorAlgebra blank(std::string name, int dim, int n) {
    ColorAlgebra g;
    g.name = std::move(name);
    g.dim = dim;
    g.n = n;
    g.f_.assign(dim * dim * dim, Scalar());
    g.T.assign(dim, ScalarMatrix(n, std::vector<Scalar>(n)));
    return g;
  }

  void set_f(int a, int b, int c, const Scalar& v) {
    const int p[6][3] = {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}};
    for (int k = 0; k < 6; ++k) {
      f_[(p[k][0] * dim + p[k][1]) * dim + p[k][2]] = k < 3 ? v : -v;
    }
  }

  ScalarMatrix mul(const ScalarMatrix& x, const ScalarMatrix& y) const {
    ScalarMatrix r(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) r[i][j] += x[i][k] * y[k][j];
      }
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Field symbols.  A symbol id is 2k + parity so that products need no table.

using SymbolId = std::uint32_t;

struct FieldSymbol {
  Species species = Species::A;
  int color = 0;    // adjoint index for A, ω, ω̄, h; fundamental index for ψ, ψ̄
  int lorentz = 0;  // A only
  Degrees degrees() const { return species_degrees(species); }
  bool odd() const { return (degrees().total & 1) != 0; }
};

inline bool symbol_odd(SymbolId s) { return (s & 1U) != 0; }

class FieldTable {
 public:
  explicit FieldTable(const ColorAlgebra& g) : g_(g) {
    for (int mu = 0; mu < g.lorentz; ++mu) {
      for (int a = 0; a < g.dim; ++a) push({Species::A, a, mu});
    }
    for (Species s : {Species::Omega, Species::OmegaBar, Species::H}) {
      for (int a = 0; a < g.dim; ++a) push({s, a, 0});
    }
    for (Species s : {Species::Psi, Species::PsiBar}) {
      for (int a = 0; a < g.n; ++a) push({s, a, 0});
    }
  }

  const ColorAlgebra& algebra() const { return g_; }
  std::size_t size() const { return symbols_.size(); }
  const FieldSymbol& symbol(SymbolId id) const { return symbols_.at(id >> 1); }
  SymbolId id(std::size_t k) const { return ids_.at(k); }

  SymbolId id(Species s, int color, int lorentz = 0) const {
    std::size_t k = 0;
    const int dim = g_.dim;
    switch (s) {
      case Species::A: k = lorentz * dim + color; break;
      case Species::Omega: k = g_.lorentz * dim + color; break;
      case Species::OmegaBar: k = (g_.lorentz + 1) * dim + color; break;
      case Species::H: k = (g_.lorentz + 2) * dim + color; break;
      case Species::Psi: k = (g_.lorentz + 3) * dim + color; break;
      case Species::PsiBar: k = (g_.lorentz + 3) * dim + g_.n + color; break;
    }
    return ids_.at(k);
  }

  std::string name(SymbolId id) const {
    const FieldSymbol& f = symbol(id);
    std::string s = std::string(species_name(f.species)) + "[" + std::to_string(f.color);
    if (f.species == Species::A) s += "," + std::to_string(f.lorentz);
    return s + "]";
  }

 private:
  void push(FieldSymbol f) {
    ids_.push_back(static_cast<SymbolId>(2 * symbols_.size() + (f.odd() ? 1 : 0)));
    symbols_.push_back(f);
  }

  const ColorAlgebra& g_;
  std::vector<FieldSymbol> symbols_;
  std::vector<SymbolId> ids_;
};

// ---------------------------------------------------------------------------
// Graded-commutative polynomials

using Word = std::vector<SymbolId>;

inline int word_parity(const Word& w) {
  int p = 0;
  for (SymbolId s : w) p ^= static_cast<int>(s & 1U);
  return p;
}

/// Normal-ordered product of two normal-ordered words: the sign, or 0 when an
/// odd symbol repeats.
inline int merge_words(const Word& a, const Word& b, Word& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  // Odd symbols of a not yet emitted, for the sign of moving b's odd symbols left.
  int odd_left = 0;
  for (SymbolId s : a) odd_left += static_cast<int>(s & 1U);
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      if (j < b.size() && a[i] == b[j] && symbol_odd(a[i])) return 0;
      odd_left -= static_cast<int>(a[i] & 1U);
      out.push_back(a[i++]);
    } else {
      if (symbol_odd(b[j]) && (odd_left & 1)) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  return sign;
}

class GradedPoly {
 public:
  GradedPoly() = default;
  GradedPoly(const Scalar& c) {  // NOLINT
    if (!qcdhopf::is_zero(c)) terms_[Word{}] = c;
  }
  static GradedPoly symbol(SymbolId s, const Scalar& c = Scalar(1)) {
    GradedPoly p;
    if (!qcdhopf::is_zero(c)) p.terms_[Word{s}] = c;
    return p;
  }
  /// The product of the given symbols in the given order.
  static GradedPoly word(const std::vector<SymbolId>& symbols) {
    GradedPoly p(Scalar(1));
    for (SymbolId s : symbols) p = p * symbol(s);
    return p;
  }

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total-degree parity, or −1 when the terms mix parities.
  int parity() const {
    int p = -1;
    for (const auto& [w, c] : terms_) {
      const int q = word_parity(w);
      if (p >= 0 && p != q) return -1;
      p = q;
    }
    return p < 0 ? 0 : p;
  }

  void add(const Word& w, const Scalar& c) {
    if (qcdhopf::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (qcdhopf::is_zero(it->second)) terms_.erase(it);
    }
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GradedPoly& operator-=(const GradedPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator-(const GradedPoly& a) { return GradedPoly() - a; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r;
    Word w;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        const int sign = merge_words(wa, wb, w);
        if (sign == 0) continue;
        r.add(w, sign > 0 ? ca * cb : -(ca * cb));
      }
    }
    return r;
  }
  friend GradedPoly operator*(const Scalar& c, const GradedPoly& a) {
    GradedPoly r;
    for (const auto& [w, x] : a.terms_) r.add(w, c * x);
    return r;
  }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.terms_ == b.terms_; }

  std::string str(const FieldTable& t) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += scalar_str(c);
      for (SymbolId x : w) s += "*" + t.name(x);
    }
    return s;
  }

 private:
  std::map<Word, Scalar> terms_;
};

/// Total degree when homogeneous.
inline int total_degree(const GradedPoly& p, const FieldTable& t) {
  int d = 0;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    int e = 0;
    for (SymbolId s : w) e += t.symbol(s).degrees().total;
    if (!first && e != d) throw std::invalid_argument("inhomogeneous total degree");
    d = e;
    first = false;
  }
  return d;
}

/// Ghost degree when homogeneous.
inline int ghost_degree(const GradedPoly& p, const FieldTable& t) {
  int d = 0;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    int e = 0;
    for (SymbolId s : w) e += t.symbol(s).degrees().ghost;
    if (!first && e != d) throw std::invalid_argument("inhomogeneous ghost degree");
    d = e;
    first = false;
  }
  return d;
}

// ---------------------------------------------------------------------------
// The differential

inline GradedPoly brst_generator(SymbolId id, const FieldTable& t, const Q& g) {
  const ColorAlgebra& alg = t.algebra();
  const FieldSymbol& f = t.symbol(id);
  const Scalar gs = scalar(g);
  GradedPoly r;
  switch (f.species) {
    case Species::A:
      // g f^{abc} A^b ω^c
      for (int b = 0; b < alg.dim; ++b) {
        for (int c = 0; c < alg.dim; ++c) {
          const Scalar& x = alg.f(f.color, b, c);
          if (is_zero(x)) continue;
          r += (gs * x) * (GradedPoly::symbol(t.id(Species::A, b, f.lorentz)) *
                           GradedPoly::symbol(t.id(Species::Omega, c)));
        }
      }
      break;
    case Species::Omega:
      // ½ g f^{abc} ω^b ω^c
      for (int b = 0; b < alg.dim; ++b) {
        for (int c = 0; c < alg.dim; ++c) {
          const Scalar& x = alg.f(f.color, b, c);
          if (is_zero(x)) continue;
          r += (gs * x * scalar(make_q(1, 2))) * (GradedPoly::symbol(t.id(Species::Omega, b)) *
                                                  GradedPoly::symbol(t.id(Species::Omega, c)));
        }
      }
      break;
    case Species::OmegaBar:
      r = GradedPoly::symbol(t.id(Species::H, f.color));
      break;
    case Species::H:
      break;
    case Species::Psi:
      // g ω^a T^a_{αβ} ψ_β
      for (int a = 0; a < alg.dim; ++a) {
        for (int b = 0; b < alg.n; ++b) {
          const Scalar& x = alg.T[a][f.color][b];
          if (is_zero(x)) continue;
          r += (gs * x) * (GradedPoly::symbol(t.id(Species::Omega, a)) *
                           GradedPoly::symbol(t.id(Species::Psi, b)));
        }
      }
      break;
    case Species::PsiBar:
      // g ψ̄_β ω^a T^a_{βα}
      for (int a = 0; a < alg.dim; ++a) {
        for (int b = 0; b < alg.n; ++b) {
          const Scalar& x = alg.T[a][b][f.color];
          if (is_zero(x)) continue;
          r += (gs * x) * (GradedPoly::symbol(t.id(Species::PsiBar, b)) *
                           GradedPoly::symbol(t.id(Species::Omega, a)));
        }
      }
      break;
  }
  return r;
}

inline GradedPoly brst_s(const GradedPoly& x, const FieldTable& t, const Q& g) {
  std::map<SymbolId, GradedPoly> cache;
  GradedPoly r;
  for (const auto& [w, c] : x.terms()) {
    int prefix_parity = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = cache.find(w[i]);
      if (it == cache.end()) it = cache.emplace(w[i], brst_generator(w[i], t, g)).first;
      if (!it->second.is_zero()) {
        GradedPoly pre(c), post(Scalar(1));
        for (std::size_t k = 0; k < i; ++k) pre = pre * GradedPoly::symbol(w[k]);
        for (std::size_t k = i + 1; k < w.size(); ++k) post = post * GradedPoly::symbol(w[k]);
        GradedPoly term = pre * it->second * post;
        if (prefix_parity) r -= term;
        else r += term;
      }
      prefix_parity ^= static_cast<int>(w[i] & 1U);
    }
  }
  return r;
}

/// The graded commutator XY − (−1)^{|X||Y|} YX of homogeneous elements.  It
/// vanishes identically on the graded-commutative algebra itself; the
/// Lie-algebra-valued version is lie_bracket / MatrixElement below.
inline GradedPoly graded_bracket(const GradedPoly& x, const GradedPoly& y) {
  const int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw std::invalid_argument("graded bracket needs homogeneous inputs");
  return (px & py) ? x * y + y * x : x * y - y * x;
}

// ---------------------------------------------------------------------------
// Lie-algebra-valued elements X = X^a T^a

using LieElement = std::vector<GradedPoly>;

/// [X, Y]^a = f^{abc} X^b Y^c.
inline LieElement lie_bracket(const LieElement& x, const LieElement& y, const ColorAlgebra& g) {
  LieElement r(g.dim);
  for (int a = 0; a < g.dim; ++a) {
    for (int b = 0; b < g.dim; ++b) {
      if (x[b].is_zero()) continue;
      for (int c = 0; c < g.dim; ++c) {
        const Scalar& v = g.f(a, b, c);
        if (is_zero(v) || y[c].is_zero()) continue;
        r[a] += v * (x[b] * y[c]);
      }
    }
  }
  return r;
}

/// n×n matrices over GradedPoly: the fundamental representation, where the
/// product XY of two Lie-algebra-valued elements lives.
class MatrixElement {
 public:
  explicit MatrixElement(int n = 0) : n_(n), m_(n * n) {}

  static MatrixElement from_lie(const LieElement& x, const ColorAlgebra& g) {
    MatrixElement r(g.n);
    for (int a = 0; a < g.dim; ++a) {
      if (x[a].is_zero()) continue;
      for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
          if (!qcdhopf::is_zero(g.T[a][i][j])) r.at(i, j) += g.T[a][i][j] * x[a];
        }
      }
    }
    return r;
  }

  /// X^a = tr(T^a X) / tr(T^a T^a).
  LieElement to_lie(const ColorAlgebra& g) const {
    LieElement r(g.dim);
    const Scalar inv = Scalar(1) / g.trace_norm;
    for (int a = 0; a < g.dim; ++a) {
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          if (!qcdhopf::is_zero(g.T[a][j][i])) r[a] += (inv * g.T[a][j][i]) * at(i, j);
        }
      }
    }
    return r;
  }

  int size() const { return n_; }
  GradedPoly& at(int i, int j) { return m_[i * n_ + j]; }
  const GradedPoly& at(int i, int j) const { return m_[i * n_ + j]; }

  int parity() const {
    int p = -1;
    for (const GradedPoly& x : m_) {
      if (x.is_zero()) continue;
      const int q = x.parity();
      if (q < 0 || (p >= 0 && p != q)) return -1;
      p = q;
    }
    return p < 0 ? 0 : p;
  }

  bool is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const GradedPoly& x) { return x.is_zero(); });
  }

  MatrixElement map(const auto& fn) const {
    MatrixElement r(n_);
    for (std::size_t k = 0; k < m_.size(); ++k) r.m_[k] = fn(m_[k]);
    return r;
  }

  friend MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
    MatrixElement r = a;
    for (std::size_t k = 0; k < r.m_.size(); ++k) r.m_[k] += b.m_[k];
    return r;
  }
  friend MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) {
    MatrixElement r = a;
    for (std::size_t k = 0; k < r.m_.size(); ++k) r.m_[k] -= b.m_[k];
    return r;
  }
  friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
    MatrixElement r(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      for (int k = 0; k < a.n_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
    return r;
  }
  friend MatrixElement operator*(int sign, const MatrixElement& a) {
    return sign >= 0 ? a : MatrixElement(a.n_) - a;
  }
  friend bool operator==(const MatrixElement& a, const MatrixElement& b) { return a.m_ == b.m_; }

  std::string str(const FieldTable& t) const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + at(i, j).str(t);
      s += "]";
    }
    return s + "]";
  }

 private:
  int n_;
  std::vector<GradedPoly> m_;
};

inline int bracket_sign(int px, int py) { return (px & py) ? -1 : 1; }

/// [X, Y] = XY − (−1)^{|X||Y|} YX.
inline MatrixElement graded_bracket(const MatrixElement& x, const MatrixElement& y) {
  const int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw std::invalid_argument("graded bracket needs homogeneous inputs");
  return x * y - bracket_sign(px, py) * (y * x);
}

inline MatrixElement brst_s(const MatrixElement& x, const FieldTable& t, const Q& g) {
  return x.map([&](const GradedPoly& p) { return brst_s(p, t, g); });
}

// ---------------------------------------------------------------------------
// Checks

struct BrstReport {
  std::string check;
  bool pass = true;
  long trials = 0;
  std::string witness;  // empty on success
};

/// Random sampling in the symbol algebra with an explicit seeded engine.
class FieldSampler {
 public:
  FieldSampler(const FieldTable& t, std::uint64_t seed) : t_(t), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  SymbolId any_symbol() { return t_.id(static_cast<std::size_t>(uniform(0, static_cast<int>(t_.size()) - 1))); }

  /// A nonzero monomial of 1..max_len symbols.
  GradedPoly monomial(int max_len) {
    for (;;) {
      const int len = uniform(1, max_len);
      std::vector<SymbolId> w;
      for (int k = 0; k < len; ++k) w.push_back(any_symbol());
      GradedPoly p = GradedPoly::word(w);
      if (!p.is_zero()) return p;
    }
  }

  /// A nonzero polynomial of one or two terms, homogeneous of total degree d.
  GradedPoly homogeneous(int d) {
    GradedPoly r;
    const int nterms = uniform(1, 2);
    while (static_cast<int>(r.terms().size()) < nterms) {
      GradedPoly m = monomial(3);
      if (total_degree(m, t_) != d) continue;
      r += scalar(make_q(uniform(1, 3) * (uniform(0, 1) ? 1 : -1), 1)) * m;
    }
    return r;
  }

  /// A Lie-algebra-valued element of total degree d on one or two colors.
  LieElement lie(int d) {
    const ColorAlgebra& g = t_.algebra();
    LieElement x(g.dim);
    const int ncolors = uniform(1, 2);
    for (int k = 0; k < ncolors; ++k) x[uniform(0, g.dim - 1)] += homogeneous(d);
    return x;
  }

 private:
  const FieldTable& t_;
  std::mt19937_64 rng_;
};

/// s² = 0 on every generator and on `trials` random monomials of degree ≤ 4.
inline BrstReport nilpotency_check(const FieldTable& t, const Q& g, long trials, std::uint64_t seed) {
  BrstReport rep{"nilpotency"};
  auto test = [&](const GradedPoly& x) {
    ++rep.trials;
    GradedPoly r = brst_s(brst_s(x, t, g), t, g);
    if (r.is_zero()) return true;
    rep.pass = false;
    rep.witness = "s^2(" + x.str(t) + ") = " + r.str(t);
    return false;
  };
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!test(GradedPoly::symbol(t.id(k)))) return rep;
  }
  FieldSampler rnd(t, seed);
  for (long k = 0; k < trials; ++k) {
    if (!test(rnd.monomial(4))) return rep;
  }
  return rep;
}

/// s raises the ghost degree by exactly one.
inline BrstReport ghost_degree_check(const FieldTable& t, const Q& g, long trials, std::uint64_t seed) {
  BrstReport rep{"ghost_degree"};
  FieldSampler rnd(t, seed);
  for (long k = 0; k < trials; ++k) {
    ++rep.trials;
    GradedPoly x = rnd.monomial(4);
    GradedPoly sx = brst_s(x, t, g);
    if (sx.is_zero()) continue;
    if (ghost_degree(sx, t) != ghost_degree(x, t) + 1 || total_degree(sx, t) != total_degree(x, t) + 1) {
      rep.pass = false;
      rep.witness = "s(" + x.str(t) + ") = " + sx.str(t);
      return rep;
    }
  }
  return rep;
}

/// The three graded-bracket identities, the derivation property of s, and
/// agreement of the matrix bracket with f^{abc}, on random triples.
inline std::vector<BrstReport> bracket_checks(const FieldTable& t, const Q& g, long trials,
                                              std::uint64_t seed) {
  const ColorAlgebra& alg = t.algebra();
  BrstReport skew{"bracket_skew_symmetry"}, leibniz{"bracket_leibniz"}, jacobi{"bracket_jacobi"},
      deriv{"s_derivation"}, comp{"bracket_components"};
  FieldSampler rnd(t, seed);
  auto fail = [&](BrstReport& r, const std::string& w) {
    if (r.pass) r.witness = w;
    r.pass = false;
  };
  for (long k = 0; k < trials; ++k) {
    const int dx = rnd.uniform(-1, 2), dy = rnd.uniform(-1, 2), dz = rnd.uniform(-1, 2);
    const LieElement lx = rnd.lie(dx), ly = rnd.lie(dy), lz = rnd.lie(dz);
    const MatrixElement X = MatrixElement::from_lie(lx, alg), Y = MatrixElement::from_lie(ly, alg),
                        Z = MatrixElement::from_lie(lz, alg);
    const int px = dx & 1, py = dy & 1, pz = dz & 1;
    auto sgn = [](int p) { return p ? -1 : 1; };
    auto triple = [&] { return "X=" + X.str(t) + " Y=" + Y.str(t) + " Z=" + Z.str(t); };
    for (BrstReport* r : {&skew, &leibniz, &jacobi, &deriv, &comp}) ++r->trials;

    const MatrixElement xy = graded_bracket(X, Y);
    // [X,Y] = −(−1)^{|X||Y|} [Y,X]
    if (!(xy + sgn(px & py) * graded_bracket(Y, X)).is_zero()) fail(skew, triple());
    // [XY,Z] = X[Y,Z] + (−1)^{|Y||Z|} [X,Z] Y
    if (!(graded_bracket(X * Y, Z) - X * graded_bracket(Y, Z) -
          sgn(py & pz) * (graded_bracket(X, Z) * Y))
             .is_zero()) {
      fail(leibniz, triple());
    }
    // (−1)^{|X||Z|}[[X,Y],Z] + (−1)^{|Y||X|}[[Y,Z],X] + (−1)^{|Z||Y|}[[Z,X],Y] = 0
    MatrixElement jac = sgn(px & pz) * graded_bracket(xy, Z) +
                        sgn(py & px) * graded_bracket(graded_bracket(Y, Z), X) +
                        sgn(pz & py) * graded_bracket(graded_bracket(Z, X), Y);
    if (!jac.is_zero()) fail(jacobi, triple());
    // s[X,Y] = [sX,Y] + (−1)^{|X|}[X,sY]
    const MatrixElement sX = brst_s(X, t, g), sY = brst_s(Y, t, g);
    MatrixElement lhs = brst_s(xy, t, g);
    MatrixElement rhs = graded_bracket(sX, Y) + sgn(px) * graded_bracket(X, sY);
    if (!(lhs - rhs).is_zero()) fail(deriv, triple());
    // matrix bracket against f^{abc} X^b Y^c
    if (!(MatrixElement::from_lie(lie_bracket(lx, ly, alg), alg) == xy)) fail(comp, triple());
  }
  return {skew, leibniz, jacobi, deriv, comp};
}

/// s annihilates F^aF^a (F^a_{μν} = g f^{abc} A^b_μ A^c_ν), h^a h^a and the
/// quark color term ψ̄(λ1 A_μ^a T^a + λ5)ψ with λ1 = g.
inline std::vector<BrstReport> pointwise_invariance_check(const FieldTable& t, const Q& g,
                                                          const Q& lambda5) {
  const ColorAlgebra& alg = t.algebra();
  const Scalar gs = scalar(g);
  auto sym = [&](Species s, int a, int mu = 0) { return GradedPoly::symbol(t.id(s, a, mu)); };
  std::vector<BrstReport> out;
  auto run = [&](const std::string& name, const GradedPoly& x) {
    BrstReport r{name};
    r.trials = 1;
    GradedPoly sx = brst_s(x, t, g);
    if (x.is_zero() || !sx.is_zero()) {
      r.pass = false;
      r.witness = x.is_zero() ? "invariant is identically zero" : "s(...) = " + sx.str(t);
    }
    out.push_back(r);
  };

  GradedPoly f2;
  for (int mu = 0; mu < alg.lorentz; ++mu) {
    for (int nu = 0; nu < alg.lorentz; ++nu) {
      if (mu == nu) continue;
      for (int a = 0; a < alg.dim; ++a) {
        GradedPoly F;
        for (int b = 0; b < alg.dim; ++b) {
          for (int c = 0; c < alg.dim; ++c) {
            if (!is_zero(alg.f(a, b, c))) {
              F += (gs * alg.f(a, b, c)) * (sym(Species::A, b, mu) * sym(Species::A, c, nu));
            }
          }
        }
        f2 += F * F;
      }
    }
  }
  run("invariance_F2", f2);

  GradedPoly h2;
  for (int a = 0; a < alg.dim; ++a) h2 += sym(Species::H, a) * sym(Species::H, a);
  run("invariance_h2", h2);

  GradedPoly quark;
  for (int mu = 0; mu < alg.lorentz; ++mu) {
    for (int x = 0; x < alg.n; ++x) {
      for (int y = 0; y < alg.n; ++y) {
        GradedPoly m;
        for (int a = 0; a < alg.dim; ++a) {
          if (!is_zero(alg.T[a][x][y])) m += (gs * alg.T[a][x][y]) * sym(Species::A, a, mu);
        }
        if (x == y) m += GradedPoly(scalar(lambda5));
        quark += sym(Species::PsiBar, x) * m * sym(Species::Psi, y);
      }
    }
  }
  run("invariance_quark", quark);
  return out;
}

/// Everything the brst-check command reports.
inline std::vector<BrstReport> brst_check_all(const ColorAlgebra& alg, std::uint64_t seed, long trials,
                                              const Q& g = Q(1), const Q& lambda5 = make_q(3, 7)) {
  FieldTable t(alg);
  std::vector<BrstReport> out;
  BrstReport structure{"structure_constants"};
  structure.trials = 1;
  if (!alg.f_antisymmetric()) structure.pass = false, structure.witness = "f not totally antisymmetric";
  else if (!alg.f_jacobi()) structure.pass = false, structure.witness = "f violates the Jacobi identity";
  else if (!alg.generators_consistent()) {
    structure.pass = false, structure.witness = "[T^a,T^b] != f^{abc}T^c or trace normalization";
  }
  out.push_back(structure);
  out.push_back(nilpotency_check(t, g, trials, seed));
  out.push_back(ghost_degree_check(t, g, trials, seed + 1));
  for (BrstReport& r : bracket_checks(t, g, trials, seed + 2)) out.push_back(r);
  for (BrstReport& r : pointwise_invariance_check(t, g, lambda5)) out.push_back(r);
  return out;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_BRST_HPP
