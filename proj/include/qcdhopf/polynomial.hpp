#ifndef QCDHOPF_POLYNOMIAL_HPP
#define QCDHOPF_POLYNOMIAL_HPP

// Polynomials over Q in the formal variables ℓ (log of the mass scale),
// t and s (renormalization-group times).

#include <array>
#include <map>
#include <string>

#include "rational.hpp"

namespace qcdhopf {

enum class Var : int { Ell = 0, T = 1, S = 2 };

class Poly {
 public:
  using Exps = std::array<int, 3>;

  Poly() = default;
  Poly(const Q& c) {  // NOLINT: constants promote implicitly
    if (!qcdhopf::is_zero(c)) terms_[Exps{}] = c;
  }
  Poly(long c) : Poly(Q(c)) {}  // NOLINT

  static Poly var(Var v, int power = 1, const Q& c = Q(1)) {
    Poly p;
    Exps e{};
    e[static_cast<int>(v)] = power;
    if (!qcdhopf::is_zero(c)) p.terms_[e] = c;
    return p;
  }

  const std::map<Exps, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Q constant() const {
    auto it = terms_.find(Exps{});
    return it == terms_.end() ? Q(0) : it->second;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{});
  }

  int degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
  }

  /// Coefficient of v^k, as a polynomial in the other variables.
  Poly coefficient(Var v, int k) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<int>(v)] != k) continue;
      Exps f = e;
      f[static_cast<int>(v)] = 0;
      r.add(f, c);
    }
    return r;
  }

  Poly derivative(Var v) const {
    Poly r;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exps f = e;
      --f[i];
      r.add(f, c * e[i]);
    }
    return r;
  }

  /// Substitutes v := p.
  Poly substitute(Var v, const Poly& p) const {
    Poly r;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
      Exps rest = e;
      rest[i] = 0;
      Poly term;
      term.add(rest, c);
      for (int k = 0; k < e[i]; ++k) term = term * p;
      r += term;
    }
    return r;
  }

  void add(const Exps& e, const Q& c) {
    if (qcdhopf::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (qcdhopf::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"l", "t", "s"};
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c) + ")";
      for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        s += std::string("*") + names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  std::map<Exps, Q> terms_;
};

}  // namespace qcdhopf

#endif  // QCDHOPF_POLYNOMIAL_HPP
