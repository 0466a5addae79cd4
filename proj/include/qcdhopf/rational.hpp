#ifndef QCDHOPF_RATIONAL_HPP
#define QCDHOPF_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcdhopf {

/// Exact rational scalar used throughout the algebra.
using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

/// Serializes as "p/q" (always with a denominator, "0/1" for zero).
inline std::string to_string(const Q& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Q parse_q(std::string_view text) {
  Q r;
  std::string s(text);
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  r.canonicalize();
  return r;
}

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

/// Generalized binomial coefficient alpha choose k for rational alpha.
inline Q binomial(const Q& alpha, int k) {
  Q r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (alpha - i);
    r /= (i + 1);
  }
  return r;
}

inline Q factorial(int n) {
  Q r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_RATIONAL_HPP
