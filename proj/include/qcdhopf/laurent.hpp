#ifndef QCDHOPF_LAURENT_HPP
#define QCDHOPF_LAURENT_HPP

// Truncated Laurent series in the regulator z with coefficients in Q[ℓ,t,s].
// A series is known exactly below its precision: every coefficient of z^k
// with k < prec is exact, nothing is known from z^prec on.

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>

#include "polynomial.hpp"

namespace qcdhopf {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Laurent {
 public:
  static constexpr int kExact = INT_MAX / 4;

  Laurent() = default;
  Laurent(const Poly& c) { set(0, c); }  // NOLINT
  Laurent(const Q& c) : Laurent(Poly(c)) {}  // NOLINT
  Laurent(long c) : Laurent(Poly(c)) {}  // NOLINT

  static Laurent monomial(int k, const Poly& c = Poly(1)) {
    Laurent r;
    r.set(k, c);
    return r;
  }

  /// exp(a·z) known through z^{prec−1}.
  static Laurent exp_z(const Poly& a, int prec) {
    Laurent r;
    Poly power(1);
    for (int k = 0; k < prec; ++k) {
      r.set(k, power * Poly(Q(1) / factorial(k)));
      power = power * a;
    }
    r.prec_ = std::max(prec, 0);
    return r;
  }

  const std::map<int, Poly>& terms() const { return c_; }
  int precision() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }

  /// Lowers the precision, dropping the now-unknown terms.
  Laurent truncated(int prec) const {
    Laurent r = *this;
    r.prec_ = std::min(prec_, prec);
    r.c_.erase(r.c_.lower_bound(r.prec_), r.c_.end());
    return r;
  }

  Poly coeff(int k) const {
    if (k >= prec_) {
      throw TruncationError("coefficient of z^" + std::to_string(k) +
                            " lies beyond the series precision " + std::to_string(prec_));
    }
    auto it = c_.find(k);
    return it == c_.end() ? Poly() : it->second;
  }

  /// Lowest exponent with a nonzero coefficient (prec if none is known).
  int valuation() const { return c_.empty() ? prec_ : c_.begin()->first; }
  int pole_order() const { return std::max(0, -valuation()); }

  bool is_zero() const { return c_.empty(); }
  bool pole_free() const { return c_.empty() || c_.begin()->first >= 0; }
  bool pure_pole() const { return c_.empty() || c_.rbegin()->first < 0; }

  /// ℓ-degree of the known coefficients.
  int degree(Var v) const {
    int d = 0;
    for (const auto& [k, p] : c_) d = std::max(d, p.degree(v));
    return d;
  }

  Laurent map_coeffs(const auto& f) const {
    Laurent r;
    r.prec_ = prec_;
    for (const auto& [k, p] : c_) r.set(k, f(p));
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    prec_ = std::min(prec_, o.prec_);
    for (const auto& [k, p] : o.c_) {
      if (k < prec_) add(k, p);
    }
    c_.erase(c_.lower_bound(prec_), c_.end());
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    return a.map_coeffs([](const Poly& p) { return -p; });
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    // (a + O(z^pa))(b + O(z^pb)) is known below min(pa + val b, pb + val a).
    auto shifted = [](int prec, int val) {
      if (prec >= kExact) return kExact;
      return std::min(kExact, prec + val);
    };
    r.prec_ = std::min(shifted(a.prec_, b.valuation()), shifted(b.prec_, a.valuation()));
    for (const auto& [ka, pa] : a.c_) {
      for (const auto& [kb, pb] : b.c_) {
        if (ka + kb < r.prec_) r.add(ka + kb, pa * pb);
      }
    }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Equality of the commonly known parts.
  friend bool agree(const Laurent& a, const Laurent& b) {
    const int p = std::min(a.prec_, b.prec_);
    return a.truncated(p).c_ == b.truncated(p).c_;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.prec_ == b.prec_ && a.c_ == b.c_;
  }

  std::string str() const {
    std::string s;
    for (const auto& [k, p] : c_) {
      if (!s.empty()) s += " + ";
      s += "[" + p.str() + "]";
      if (k != 0) s += "*z^" + std::to_string(k);
    }
    if (s.empty()) s = "0";
    if (!exact()) s += " + O(z^" + std::to_string(prec_) + ")";
    return s;
  }

  void set(int k, const Poly& p) {
    if (k >= prec_) return;
    if (p.is_zero()) c_.erase(k);
    else c_[k] = p;
  }

 private:
  void add(int k, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(k, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  std::map<int, Poly> c_;
  int prec_ = kExact;
};

/// Minimal subtraction: the strict pole part, which is exact whenever the
/// input is known through z^{-1}.
inline Laurent pole_part(const Laurent& x) {
  if (x.precision() < 0) {
    throw TruncationError("pole part needs the series through z^-1, precision is " +
                          std::to_string(x.precision()));
  }
  Laurent r;
  for (const auto& [k, p] : x.terms()) {
    if (k < 0) r.set(k, p);
  }
  return r;
}

inline Laurent regular_part(const Laurent& x) {
  Laurent r = x.truncated(x.precision());
  for (const auto& [k, p] : x.terms()) {
    if (k < 0) r.set(k, Poly());
  }
  return r;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_LAURENT_HPP
