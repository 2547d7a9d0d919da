#pragma once

// Exact sparse linear algebra over Scalar.

#include "a2l2/scalar.hpp"

#include <deque>
#include <map>
#include <optional>
#include <vector>

namespace a2l2 {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
  if (is_zero(a)) return;
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += a * c;
    if (is_zero(it->second)) y.erase(it);
  }
}

template <class Key>
void add_term(SparseVec<Key>& y, const Key& k, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = y.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) y.erase(it);
  }
}

/// Row echelon form built one vector at a time.
///
/// Each stored row has its smallest key as pivot, pivot coefficient 1, and
/// zeros at every pivot that existed when it was inserted. Reduction scans a
/// vector's keys in ascending order, which is enough because eliminating a
/// pivot only touches keys at or above it.
template <class Key>
class IncrementalBasis {
 public:
  /// Reduces v against the stored rows. Also returns, if requested, the
  /// coefficients c_i with v = reduced + sum c_i * inserted_i.
  SparseVec<Key> reduce(SparseVec<Key> v, std::vector<Scalar>* combo = nullptr) const {
    if (combo) combo->assign(rows_.size(), 0);
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivot_row_.find(it->first);
      if (p == pivot_row_.end()) {
        ++it;
        continue;
      }
      Key k = it->first;
      Scalar c = it->second;
      axpy(v, Scalar(-c), rows_[p->second]);
      if (combo) {
        const auto& src = row_combo_[p->second];
        for (std::size_t i = 0; i < src.size(); ++i) (*combo)[i] += c * src[i];
      }
      it = v.upper_bound(k);
    }
    return v;
  }

  /// Inserts v if it is independent of the current span; returns whether it was.
  bool insert(const SparseVec<Key>& v) {
    std::vector<Scalar> combo;
    SparseVec<Key> r = reduce(v, &combo);
    if (r.empty()) return false;
    // r = v - sum combo_i * inserted_i, expressed in terms of inserted vectors.
    std::vector<Scalar> own(rows_.size() + 1, 0);
    for (std::size_t i = 0; i < combo.size(); ++i) own[i] = -combo[i];
    own.back() = 1;
    Scalar lead = r.begin()->second;
    for (auto& [k, c] : r) c /= lead;
    for (auto& c : own) c /= lead;
    for (auto& rc : row_combo_) rc.push_back(0);
    pivot_row_.emplace(r.begin()->first, rows_.size());
    rows_.push_back(std::move(r));
    row_combo_.push_back(std::move(own));
    return true;
  }

  bool contains(const SparseVec<Key>& v) const { return reduce(v).empty(); }

  /// Coefficients of v in terms of the inserted vectors, if v is in the span.
  std::optional<std::vector<Scalar>> express(const SparseVec<Key>& v) const {
    std::vector<Scalar> combo;
    if (!reduce(v, &combo).empty()) return std::nullopt;
    return combo;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<Key>>& rows() const { return rows_; }
  std::vector<Key> pivots() const {
    std::vector<Key> out;
    for (const auto& r : rows_) out.push_back(r.begin()->first);
    return out;
  }

 private:
  std::vector<SparseVec<Key>> rows_;
  // row_combo_[r][i]: coefficient of the i-th inserted vector in row r.
  std::vector<std::vector<Scalar>> row_combo_;
  std::map<Key, std::size_t> pivot_row_;
};

using Matrix = std::vector<std::vector<Scalar>>;

inline std::size_t rank(const Matrix& rows) {
  IncrementalBasis<std::size_t> b;
  for (const auto& row : rows) {
    SparseVec<std::size_t> v;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!is_zero(row[j])) v.emplace(j, row[j]);
    b.insert(v);
  }
  return b.rank();
}

/// Solves the square system a x = b; nullopt when a is singular.
inline std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Scalar f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Matrix> inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Scalar f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_zero(a[col][c])) a[r][c] -= f * a[col][c];
        if (!is_zero(inv[col][c])) inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

/// Span of the orbit of a weight vector under operators that shift weights
/// additively. apply(op, x) returns op.x; shift(op) is the weight of op.
/// Returns one IncrementalBasis per weight occurring in the closure.
template <class Key, class Weight, class Apply, class Shift>
std::map<Weight, IncrementalBasis<Key>> weighted_closure(const SparseVec<Key>& seed, const Weight& seed_weight,
                                                         int num_ops, Apply apply, Shift shift) {
  std::map<Weight, IncrementalBasis<Key>> spans;
  std::deque<std::pair<SparseVec<Key>, Weight>> queue;
  if (seed.empty()) return spans;
  spans[seed_weight].insert(seed);
  queue.emplace_back(seed, seed_weight);
  while (!queue.empty()) {
    auto [x, w] = std::move(queue.front());
    queue.pop_front();
    for (int op = 0; op < num_ops; ++op) {
      SparseVec<Key> y = apply(op, x);
      if (y.empty()) continue;
      Weight wy = w;
      const auto& s = shift(op);
      for (std::size_t i = 0; i < wy.size(); ++i) wy[i] += s[i];
      if (spans[wy].insert(y)) queue.emplace_back(std::move(y), std::move(wy));
    }
  }
  return spans;
}

}  // namespace a2l2
