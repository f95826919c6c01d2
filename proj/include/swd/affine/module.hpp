#pragma once

// Finite-dimensional modules over U'_q of affine type A_{N-1}^{(1)}, given
// by a labelled weight basis and sparse matrices for e_i, f_i (i = 0..N-1).
// K_i acts diagonally by q^{<h_i, wt>}.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/laurent.hpp"
#include "swd/exact/ratfun.hpp"
#include "swd/linalg/matrix.hpp"

namespace swd {

/// <h_0, wt>, ..., <h_{N-1}, wt>.
using WeightVec = std::vector<int>;

/// Affine Cartan matrix of type A_{N-1}^{(1)}; for N = 2 the off-diagonal entries are -2.
inline std::vector<std::vector<int>> affine_cartan(int N) {
  if (N < 2) throw std::invalid_argument("affine_cartan: N must be at least 2");
  std::vector<std::vector<int>> a(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), 0));
  for (int i = 0; i < N; ++i) {
    a[i][i] = 2;
    a[i][(i + 1) % N] += -1;
    a[i][(i + N - 1) % N] += -1;
  }
  return a;
}

/// Simple root alpha_j as a weight vector (its column of the Cartan matrix).
inline WeightVec simple_root(int N, int j) {
  auto a = affine_cartan(N);
  WeightVec w(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) w[i] = a[i][j];
  return w;
}

inline WeightVec operator+(WeightVec a, const WeightVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline int level(const WeightVec& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

/// Simple reflection sigma_i (i >= 1) of the finite Weyl group acting on weights.
inline WeightVec reflect(const WeightVec& w, int i) {
  const int N = static_cast<int>(w.size());
  WeightVec a = simple_root(N, i);
  WeightVec r = w;
  for (int j = 0; j < N; ++j) r[j] -= w[i] * a[j];
  return r;
}

inline std::string weight_string(const WeightVec& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

template <class F>
struct FinModule {
  int N = 0;
  std::vector<std::string> labels;
  std::vector<WeightVec> weights;
  std::vector<Matrix<F>> E;  // E[i], i = 0..N-1
  std::vector<Matrix<F>> Fm;

  int dim() const { return static_cast<int>(labels.size()); }

  Matrix<F> K(int i, int power = 1) const {
    Matrix<F> k(dim(), dim());
    for (int b = 0; b < dim(); ++b) k.set(b, b, q_pow<F>(power * weights[b][i]));
    return k;
  }

  int index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("FinModule: no basis vector " + label);
    return static_cast<int>(it - labels.begin());
  }

  /// Entrywise map into another field (e.g. a specialization z -> a).
  template <class G, class Fn>
  FinModule<G> map(Fn&& fn) const {
    FinModule<G> m;
    m.N = N;
    m.labels = labels;
    m.weights = weights;
    for (const auto& e : E) m.E.push_back(e.template map<G>(fn));
    for (const auto& f : Fm) m.Fm.push_back(f.template map<G>(fn));
    return m;
  }
};

template <class F>
bool operator==(const FinModule<F>& a, const FinModule<F>& b) {
  return a.N == b.N && a.labels == b.labels && a.weights == b.weights && a.E == b.E && a.Fm == b.Fm;
}

namespace detail {
inline std::string subset_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

inline std::vector<std::vector<int>> k_subsets(int N, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= N; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}
}  // namespace detail

/// V(varpi_k) for U'_q(A_{N-1}^{(1)}) on k-subsets of {1..N}, lexicographic
/// order (so {1..k}, the dominant vector, is basis vector 0).
/// e_i (i >= 1) replaces i+1 by i, f_i replaces i by i+1;
/// e_0 replaces 1 by N, f_0 replaces N by 1. All coefficients are 1.
template <class F = Qq>
FinModule<F> fundamental_module(int N, int k) {
  if (N < 2 || k < 1 || k > N - 1) {
    throw std::invalid_argument("fundamental_module: need 1 <= k <= N-1, got N=" + std::to_string(N) +
                                " k=" + std::to_string(k));
  }
  auto subsets = detail::k_subsets(N, k);
  FinModule<F> m;
  m.N = N;
  const int d = static_cast<int>(subsets.size());
  auto has = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  for (const auto& s : subsets) {
    m.labels.push_back(detail::subset_label(s));
    WeightVec w(static_cast<std::size_t>(N), 0);
    w[0] = int(has(s, N)) - int(has(s, 1));
    for (int i = 1; i < N; ++i) w[i] = int(has(s, i)) - int(has(s, i + 1));
    m.weights.push_back(std::move(w));
  }
  auto find = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::find(subsets.begin(), subsets.end(), s) - subsets.begin());
  };
  // move "from" to "to" inside each subset that has from but not to
  auto mover = [&](int from, int to) {
    Matrix<F> mat(d, d);
    for (int c = 0; c < d; ++c) {
      const auto& s = subsets[c];
      if (!has(s, from) || has(s, to)) continue;
      auto t = s;
      std::replace(t.begin(), t.end(), from, to);
      mat.set(find(t), c, F(1));
    }
    return mat;
  };
  m.E.push_back(mover(1, N));
  m.Fm.push_back(mover(N, 1));
  for (int i = 1; i < N; ++i) {
    m.E.push_back(mover(i + 1, i));
    m.Fm.push_back(mover(i, i + 1));
  }
  return m;
}

/// Phi_x: e_0 scaled by x, f_0 by x^{-1}.
template <class F>
FinModule<F> twist(FinModule<F> m, const F& x) {
  if (detail::zero(x)) throw PoleError("twist by zero");
  m.E[0] = x * m.E[0];
  m.Fm[0] = (F(1) / x) * m.Fm[0];
  return m;
}

/// The affinization: scalars extended to Q(q)(z) and e_0, f_0 twisted by z^{+1}, z^{-1}.
inline FinModule<Qqz> affinize(const FinModule<Qq>& m) {
  return twist(m.map<Qqz>([](const Qq& v) { return Qqz(v); }), Qqz::var());
}

/// Specialize the spectral variable of an affinized module at z = a.
inline FinModule<Qq> evaluate(const FinModule<Qqz>& m, const Qq& a) {
  return m.map<Qq>([&](const Qqz& v) { return v(a); });
}

/// M1 (x) M2 with e_i -> e_i (x) 1 + K_i (x) e_i, f_i -> f_i (x) K_i^{-1} + 1 (x) f_i.
/// Basis pair (a, b) has index a * dim(M2) + b.
template <class F>
FinModule<F> tensor(const FinModule<F>& a, const FinModule<F>& b) {
  if (a.N != b.N) throw std::invalid_argument("tensor: modules over different algebras");
  FinModule<F> m;
  m.N = a.N;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      m.labels.push_back(a.labels[i] + "⊗" + b.labels[j]);
      m.weights.push_back(a.weights[i] + b.weights[j]);
    }
  const auto ia = Matrix<F>::identity(a.dim()), ib = Matrix<F>::identity(b.dim());
  for (int i = 0; i < a.N; ++i) {
    m.E.push_back(kron(a.E[i], ib) + kron(a.K(i), b.E[i]));
    m.Fm.push_back(kron(a.Fm[i], b.K(i, -1)) + kron(ia, b.Fm[i]));
  }
  return m;
}

/// Direct sum.
template <class F>
FinModule<F> direct_sum(const FinModule<F>& a, const FinModule<F>& b) {
  FinModule<F> m;
  m.N = a.N;
  m.labels = a.labels;
  m.weights = a.weights;
  m.labels.insert(m.labels.end(), b.labels.begin(), b.labels.end());
  m.weights.insert(m.weights.end(), b.weights.begin(), b.weights.end());
  const int n = a.dim() + b.dim();
  for (int i = 0; i < a.N; ++i) {
    Matrix<F> e(n, n), f(n, n);
    for (int r = 0; r < a.dim(); ++r) {
      for (const auto& [c, v] : a.E[i].row(r)) e.set(r, c, v);
      for (const auto& [c, v] : a.Fm[i].row(r)) f.set(r, c, v);
    }
    for (int r = 0; r < b.dim(); ++r) {
      for (const auto& [c, v] : b.E[i].row(r)) e.set(a.dim() + r, a.dim() + c, v);
      for (const auto& [c, v] : b.Fm[i].row(r)) f.set(a.dim() + r, a.dim() + c, v);
    }
    m.E.push_back(std::move(e));
    m.Fm.push_back(std::move(f));
  }
  return m;
}

/// Weight multiset as weight -> multiplicity.
template <class F>
std::map<WeightVec, int> weight_character(const FinModule<F>& m) {
  std::map<WeightVec, int> ch;
  for (const auto& w : m.weights) ++ch[w];
  return ch;
}

}  // namespace swd
