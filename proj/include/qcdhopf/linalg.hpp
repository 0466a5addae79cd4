#ifndef QCDHOPF_LINALG_HPP
#define QCDHOPF_LINALG_HPP

// Sparse exact row reduction.  Columns are integers whose natural order is
// the term order; the pivot of a row is its largest column.

#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace qcdhopf {

using SparseVec = std::map<int, Q>;

inline void axpy(SparseVec& y, const Q& a, const SparseVec& x) {
  for (const auto& [c, v] : x) {
    auto [it, fresh] = y.try_emplace(c, a * v);
    if (!fresh) {
      it->second += a * v;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

/// Echelon basis of a growing subspace.
class RowEchelon {
 public:
  /// Normal form of v modulo the span: no remaining column is a pivot.
  SparseVec reduce(SparseVec v) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      int col = it->first;
      auto p = rows_.find(col);
      if (p == rows_.end()) continue;
      Q f = -it->second;
      axpy(v, f, p->second);
      it = v.lower_bound(col);
    }
    return v;
  }

  /// Adds v to the span; returns false if it was already contained.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Q lead = r.rbegin()->second;
    for (auto& [c, x] : r) x /= lead;
    rows_.emplace(r.rbegin()->first, std::move(r));
    return true;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;  // pivot column → row with lead 1
};

/// Solves A x = b for square A given as dense rows, by Gaussian
/// elimination over Q.  Returns nullopt if A is singular.
inline std::optional<std::vector<Q>> solve_dense(std::vector<std::vector<Q>> a,
                                                 std::vector<Q> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Q f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_LINALG_HPP
