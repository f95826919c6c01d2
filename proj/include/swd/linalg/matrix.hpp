#pragma once

// Sparse matrices over an exact field, stored as rows of (column -> entry).

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/rational.hpp"

namespace swd {

template <class F>
using SparseVec = std::map<int, F>;

template <class F>
void axpy(SparseVec<F>& y, const F& a, const SparseVec<F>& x) {
  if (detail::zero(a)) return;
  for (const auto& [j, v] : x) {
    auto it = y.find(j);
    if (it == y.end()) {
      y.emplace(j, a * v);
    } else {
      it->second = it->second + a * v;
      if (detail::zero(it->second)) y.erase(it);
    }
  }
}

template <class F>
SparseVec<F> scaled(const SparseVec<F>& x, const F& a) {
  SparseVec<F> r;
  if (detail::zero(a)) return r;
  for (const auto& [j, v] : x) r.emplace(j, a * v);
  return r;
}

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(static_cast<std::size_t>(rows)), ncols_(cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)].emplace(i, F(1));
    return m;
  }
  static Matrix from_rows(std::vector<SparseVec<F>> rows, int cols) {
    Matrix m;
    m.rows_ = std::move(rows);
    m.ncols_ = cols;
    return m;
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }
  const SparseVec<F>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  SparseVec<F>& row(int i) { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<SparseVec<F>>& row_data() const { return rows_; }

  F at(int i, int j) const {
    const auto& r = row(i);
    auto it = r.find(j);
    return it == r.end() ? F(0) : it->second;
  }
  void set(int i, int j, const F& v) {
    auto& r = row(i);
    if (detail::zero(v)) {
      r.erase(j);
    } else {
      r[j] = v;
    }
  }
  void add(int i, int j, const F& v) {
    if (detail::zero(v)) return;
    auto& r = row(i);
    auto it = r.find(j);
    if (it == r.end()) {
      r.emplace(j, v);
    } else {
      it->second = it->second + v;
      if (detail::zero(it->second)) r.erase(it);
    }
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  /// Entrywise map into another field.
  template <class G, class Fn>
  Matrix<G> map(Fn&& fn) const {
    Matrix<G> m(rows(), cols());
    for (int i = 0; i < rows(); ++i)
      for (const auto& [j, v] : row(i)) m.set(i, j, fn(v));
    return m;
  }

  Matrix transpose() const {
    Matrix t(ncols_, rows());
    for (int i = 0; i < rows(); ++i)
      for (const auto& [j, v] : row(i)) t.rows_[static_cast<std::size_t>(j)].emplace(i, v);
    return t;
  }

  /// this * v for a column vector v.
  SparseVec<F> apply(const SparseVec<F>& v) const {
    SparseVec<F> r;
    for (int i = 0; i < rows(); ++i) {
      F acc(0);
      bool any = false;
      for (const auto& [j, a] : row(i)) {
        auto it = v.find(j);
        if (it == v.end()) continue;
        acc = acc + a * it->second;
        any = true;
      }
      if (any && !detail::zero(acc)) r.emplace(i, acc);
    }
    return r;
  }
  /// Image of the j-th standard basis vector (the j-th column).
  SparseVec<F> column(int j) const {
    SparseVec<F> r;
    for (int i = 0; i < rows(); ++i) {
      auto it = row(i).find(j);
      if (it != row(i).end()) r.emplace(i, it->second);
    }
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      SparseVec<F>& out = r.row(i);
      for (const auto& [k, v] : a.row(i)) axpy(out, v, b.row(k));
    }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (int i = 0; i < a.rows(); ++i) axpy(a.row(i), F(1), b.row(i));
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (int i = 0; i < a.rows(); ++i) axpy(a.row(i), F(-1), b.row(i));
    return a;
  }
  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) r.row(i) = scaled(a.row(i), s);
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Kronecker product; basis pairs (i, j) are numbered i * b.rows() + j.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (const auto& [j, v] : a.row(i))
        for (int k = 0; k < b.rows(); ++k)
          for (const auto& [l, w] : b.row(k)) r.row(i * b.rows() + k).emplace(j * b.cols() + l, v * w);
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < rows(); ++i) {
      out += "[";
      for (int j = 0; j < cols(); ++j) out += (j ? ", " : "") + detail::str(at(i, j));
      out += "]\n";
    }
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::vector<SparseVec<F>> rows_;
  int ncols_ = 0;
};

template <class F>
bool is_zero(const Matrix<F>& m) {
  return m.is_zero();
}

/// Commutator ab - ba.
template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

}  // namespace swd
