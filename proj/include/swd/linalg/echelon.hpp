#pragma once

// Row echelon forms over an exact field: incremental span membership, rank,
// nullspaces, inverses and linear solves.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swd/linalg/matrix.hpp"

namespace swd {

/// Incrementally maintained echelon basis of a span of sparse vectors.
/// Every stored row has leading entry 1 at its pivot column and no entries
/// to the left of it. With tracking enabled, each stored row remembers the
/// combination of inserted vectors that produced it.
template <class F>
class RowEchelon {
 public:
  explicit RowEchelon(bool track = false) : track_(track) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }
  const std::map<int, std::size_t>& pivots() const { return pivot_; }

  /// Remainder of v after reduction by the stored rows.
  SparseVec<F> reduce(SparseVec<F> v) const {
    reduce_impl(v, nullptr);
    return v;
  }
  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  /// Coefficients c with v = sum_t c[t] * (t-th inserted vector), if v lies in the span.
  /// Requires tracking.
  std::optional<SparseVec<F>> express(SparseVec<F> v) const {
    if (!track_) throw std::logic_error("RowEchelon::express needs tracking");
    SparseVec<F> combo;
    reduce_impl(v, &combo);
    if (!v.empty()) return std::nullopt;
    return combo;
  }

  /// Insert v; returns true when it enlarged the span. When it did not and
  /// tracking is on, `dependency` (if given) receives c with
  /// sum_t c[t] * inserted_t = 0 and c[this index] = 1.
  bool insert(SparseVec<F> v, SparseVec<F>* dependency = nullptr) {
    const int idx = inserted_++;
    SparseVec<F> combo;
    reduce_impl(v, track_ ? &combo : nullptr);
    if (v.empty()) {
      if (dependency && track_) {
        SparseVec<F> dep;
        for (const auto& [t, c] : combo) dep.emplace(t, -c);
        dep[idx] = F(1);
        *dependency = std::move(dep);
      }
      return false;
    }
    const int p = v.begin()->first;
    const F inv = F(1) / v.begin()->second;
    SparseVec<F> row = scaled(v, inv);
    if (track_) {
      SparseVec<F> cert;
      for (const auto& [t, c] : combo) cert.emplace(t, -(inv * c));
      cert[idx] = inv;
      certs_.push_back(std::move(cert));
    }
    pivot_.emplace(p, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  /// Clear every pivot column from all other rows (reduced row echelon form).
  void make_reduced() {
    for (auto it = pivot_.rbegin(); it != pivot_.rend(); ++it) {
      const int p = it->first;
      const std::size_t r = it->second;
      for (auto& [q, s] : pivot_) {
        if (s == r) continue;
        auto& other = rows_[s];
        auto f = other.find(p);
        if (f == other.end()) continue;
        F a = -f->second;
        axpy(other, a, rows_[r]);
        if (track_) axpy(certs_[s], a, certs_[r]);
      }
    }
  }

 private:
  // Reduce v in place; if combo is non-null, accumulate sum of coefficients
  // (over inserted vectors) of what was subtracted, with sign such that
  // original v = remainder + sum combo[t] inserted_t.
  void reduce_impl(SparseVec<F>& v, SparseVec<F>* combo) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pv = pivot_.find(it->first);
      if (pv == pivot_.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      const F a = it->second;
      axpy(v, F(-a), rows_[pv->second]);
      if (combo) axpy(*combo, a, certs_[pv->second]);
      it = v.upper_bound(col);
    }
  }

  bool track_;
  int inserted_ = 0;
  std::vector<SparseVec<F>> rows_;
  std::vector<SparseVec<F>> certs_;
  std::map<int, std::size_t> pivot_;
};

template <class F>
int rank(const Matrix<F>& a) {
  RowEchelon<F> e;
  for (const auto& r : a.row_data()) e.insert(r);
  return e.rank();
}

/// Basis of {x : A x = 0}, one vector per free column (x[free] = 1).
template <class F>
std::vector<SparseVec<F>> nullspace(const Matrix<F>& a) {
  RowEchelon<F> e;
  for (const auto& r : a.row_data()) e.insert(r);
  e.make_reduced();
  std::vector<SparseVec<F>> basis;
  const auto& piv = e.pivots();
  for (int f = 0; f < a.cols(); ++f) {
    if (piv.count(f)) continue;
    SparseVec<F> x;
    x.emplace(f, F(1));
    for (const auto& [p, r] : piv) {
      const auto& row = e.rows()[r];
      auto it = row.find(f);
      if (it != row.end()) x.emplace(p, -it->second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some x with A x = b, or nullopt when inconsistent.
template <class F>
std::optional<SparseVec<F>> solve(const Matrix<F>& a, const SparseVec<F>& b) {
  const int n = a.cols();
  RowEchelon<F> e;
  for (int i = 0; i < a.rows(); ++i) {
    SparseVec<F> r = a.row(i);
    auto it = b.find(i);
    if (it != b.end()) r.emplace(n, it->second);
    e.insert(std::move(r));
  }
  if (e.pivots().count(n)) return std::nullopt;
  e.make_reduced();
  SparseVec<F> x;
  for (const auto& [p, r] : e.pivots()) {
    const auto& row = e.rows()[r];
    auto it = row.find(n);
    if (it != row.end()) x.emplace(p, it->second);
  }
  return x;
}

/// Inverse of a square matrix; throws PoleError when singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  RowEchelon<F> e;
  for (int i = 0; i < n; ++i) {
    SparseVec<F> r = a.row(i);
    r.emplace(n + i, F(1));
    e.insert(std::move(r));
  }
  for (int p = 0; p < n; ++p)
    if (!e.pivots().count(p)) throw PoleError("inverse: singular matrix");
  e.make_reduced();
  Matrix<F> inv(n, n);
  for (const auto& [p, r] : e.pivots()) {
    for (const auto& [j, v] : e.rows()[r])
      if (j >= n) inv.set(p, j - n, v);
  }
  return inv;
}

}  // namespace swd
