#ifndef QCDHOPF_QUADRATIC_HPP
#define QCDHOPF_QUADRATIC_HPP

// Exact quadratic extensions B[√D] = {a + b√D}.  Nested, they give the
// scalars Q(√3, i) used for su(3).

#include <string>

#include "rational.hpp"

namespace qcdhopf {

template <class B, long D>
struct QuadExt {
  B a{};  // rational part
  B b{};  // coefficient of √D

  QuadExt() = default;
  QuadExt(const B& x, const B& y = B()) : a(x), b(y) {}  // NOLINT
  template <class T>
    requires std::is_integral_v<T>
  QuadExt(T x) : a(B(static_cast<long>(x))) {}  // NOLINT

  /// √D itself.
  static QuadExt root() { return QuadExt(B(), B(1L)); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadExt operator-(const QuadExt& x) { return {B() - x.a, B() - x.b}; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return {x.a * y.a + B(D) * (x.b * y.b), x.a * y.b + x.b * y.a};
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }

  /// Conjugate a − b√D and norm a² − D b².
  QuadExt conj() const { return {a, B() - b}; }
  B norm() const { return a * a - B(D) * (b * b); }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    B n = y.norm();
    QuadExt p = x * y.conj();
    return {p.a / n, p.b / n};
  }
};

template <class B, long D>
bool is_zero(const QuadExt<B, D>& x) {
  return is_zero(x.a) && is_zero(x.b);
}

template <class B, long D>
std::string to_string(const QuadExt<B, D>& x) {
  std::string root = D == -1 ? "i" : "sqrt(" + std::to_string(D) + ")";
  return "(" + to_string(x.a) + " + " + to_string(x.b) + "*" + root + ")";
}

using Q3 = QuadExt<Q, 3>;
/// Q(√3)(i).
using Scalar = QuadExt<Q3, -1>;

inline Scalar scalar(const Q& q) { return Scalar(Q3(q)); }
inline Scalar imag_unit() { return Scalar::root(); }
inline Scalar sqrt3() { return Scalar(Q3::root()); }

}  // namespace qcdhopf

#endif  // QCDHOPF_QUADRATIC_HPP
