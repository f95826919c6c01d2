#pragma once

// Finite-dimensional graded R^I(n)-modules given by explicit matrices over
// Q(q): relation checking, one-dimensional modules, grade shifts,
// characters, direct sums, module maps, submodules and quotients.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/laurent.hpp"
#include "swd/exact/ratfun.hpp"
#include "swd/klr/relations.hpp"
#include "swd/linalg/echelon.hpp"
#include "swd/linalg/matrix.hpp"

namespace swd {

struct FDModule {
  KLRParams params;
  int n = 0;
  std::vector<Seq> idem;         // idempotent supporting each basis vector
  std::vector<int> degree;       // degree of each basis vector
  std::vector<Matrix<Qq>> X;     // x_1 .. x_n
  std::vector<Matrix<Qq>> T;     // tau_1 .. tau_{n-1}
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(idem.size()); }

  Matrix<Qq> projector(const Seq& nu) const {
    Matrix<Qq> p(dim(), dim());
    for (int b = 0; b < dim(); ++b)
      if (idem[static_cast<std::size_t>(b)] == nu) p.set(b, b, Qq(1));
    return p;
  }
  std::vector<Seq> support() const {
    std::vector<Seq> s;
    for (const auto& nu : idem)
      if (std::find(s.begin(), s.end(), nu) == s.end()) s.push_back(nu);
    std::sort(s.begin(), s.end());
    return s;
  }
};

/// Empty module with n variables and the right matrix shapes.
inline FDModule empty_module(const KLRParams& p, int n, int dim) {
  FDModule m;
  m.params = p;
  m.n = n;
  m.X.assign(static_cast<std::size_t>(n), Matrix<Qq>(dim, dim));
  m.T.assign(static_cast<std::size_t>(std::max(n - 1, 0)), Matrix<Qq>(dim, dim));
  return m;
}

/// Evaluate a polynomial with rational coefficients at commuting matrices.
inline Matrix<Qq> eval_at(const Poly& f, const std::vector<Matrix<Qq>>& X, int dim) {
  Matrix<Qq> acc(dim, dim);
  for (const auto& [e, c] : f.terms()) {
    Matrix<Qq> m = Qq(c) * Matrix<Qq>::identity(dim);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) m = X[k] * m;
    acc = acc + m;
  }
  return acc;
}

/// Full check: idempotent and degree compatibility plus every defining relation.
inline KLRReport check_klr_module(const FDModule& M) {
  KLRReport rep{M.n, -1, 0, {}};
  const int n = M.n, d = M.dim();
  const PolyRep R(M.params, n);
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  check(static_cast<int>(M.degree.size()) == d && static_cast<int>(M.X.size()) == n &&
            static_cast<int>(M.T.size()) == std::max(n - 1, 0),
        "shape of basis data");
  if (!rep.ok()) return rep;
  for (const auto& nu : M.idem)
    check(static_cast<int>(nu.size()) == n, "idempotent " + seq_string(nu) + " has wrong length");
  if (!rep.ok()) return rep;
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < d; ++r)
      for (const auto& [c, v] : M.X[k].row(r))
        check(M.idem[r] == M.idem[c] && M.degree[r] == M.degree[c] + 2,
              "x" + std::to_string(k + 1) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                  ") breaks idempotents or grading");
  for (int a = 0; a + 1 < n; ++a)
    for (int r = 0; r < d; ++r)
      for (const auto& [c, v] : M.T[a].row(r))
        check(M.idem[r] == swap_places(M.idem[c], a) && M.degree[r] == M.degree[c] + R.tau_degree(a, M.idem[c]),
              "tau" + std::to_string(a + 1) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                  ") breaks idempotents or grading");
  for (int k = 0; k < n; ++k)
    for (int m = k + 1; m < n; ++m)
      check(M.X[k] * M.X[m] == M.X[m] * M.X[k], "x" + std::to_string(k + 1) + " x" + std::to_string(m + 1) + " commute");
  for (int a = 0; a + 1 < n; ++a)
    for (int b = a + 2; b + 1 < n; ++b)
      check(M.T[a] * M.T[b] == M.T[b] * M.T[a], "tau" + std::to_string(a + 1) + " tau" + std::to_string(b + 1) + " commute");
  for (const auto& nu : M.support()) {
    const Matrix<Qq> E = M.projector(nu);
    for (int a = 0; a + 1 < n; ++a) {
      const std::string ta = "tau" + std::to_string(a + 1);
      const int i = nu[a], j = nu[a + 1];
      check(M.T[a] * M.T[a] * E == eval_at(M.params.Q(i, j, n, a, a + 1), M.X, d) * E,
            ta + "^2 e" + seq_string(nu) + " = Q e" + seq_string(nu));
      for (int m = 0; m < n; ++m) {
        const int sm = m == a ? a + 1 : m == a + 1 ? a : m;
        Matrix<Qq> lhs = (M.T[a] * M.X[m] - M.X[sm] * M.T[a]) * E;
        Matrix<Qq> rhs(d, d);
        if (i == j && m == a) rhs = Qq(-1) * E;
        if (i == j && m == a + 1) rhs = E;
        check(lhs == rhs, ta + " x" + std::to_string(m + 1) + " straightening on e" + seq_string(nu));
      }
      if (a + 2 < n) {
        Matrix<Qq> lhs = (M.T[a + 1] * M.T[a] * M.T[a + 1] - M.T[a] * M.T[a + 1] * M.T[a]) * E;
        Matrix<Qq> rhs(d, d);
        if (i == nu[a + 2]) rhs = eval_at(braid_correction(M.params, n, i, j, a), M.X, d) * E;
        check(lhs == rhs, "braid at " + std::to_string(a + 1) + " on e" + seq_string(nu));
      }
    }
  }
  return rep;
}

/// The module k e(nu) with x = 0 and tau = 0; rejected when a relation fails.
inline FDModule one_dim_module(const KLRParams& p, const Seq& nu) {
  const int n = static_cast<int>(nu.size());
  FDModule m = empty_module(p, n, 1);
  m.idem = {nu};
  m.degree = {0};
  m.labels = {"L" + seq_string(nu)};
  auto rep = check_klr_module(m);
  if (!rep.ok()) throw std::invalid_argument("one_dim_module" + seq_string(nu) + ": relation fails: " + rep.failures.front());
  return m;
}

inline FDModule grade_shift(FDModule m, int s) {
  for (auto& d : m.degree) d += s;
  return m;
}

inline std::map<Seq, LaurentQ> graded_character(const FDModule& m) {
  std::map<Seq, LaurentQ> ch;
  for (int b = 0; b < m.dim(); ++b) ch[m.idem[b]].add_term(m.degree[b], Rat(1));
  return ch;
}

inline std::string character_string(const std::map<Seq, LaurentQ>& ch) {
  std::string s;
  for (const auto& [nu, p] : ch) s += (s.empty() ? "" : " + ") + ("(" + p.to_string() + ")e" + seq_string(nu));
  return s.empty() ? "0" : s;
}

namespace detail {
inline Matrix<Qq> block_diag(const Matrix<Qq>& a, const Matrix<Qq>& b) {
  Matrix<Qq> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (const auto& [j, v] : a.row(i)) r.set(i, j, v);
  for (int i = 0; i < b.rows(); ++i)
    for (const auto& [j, v] : b.row(i)) r.set(a.rows() + i, a.cols() + j, v);
  return r;
}
}  // namespace detail

inline FDModule direct_sum(const FDModule& a, const FDModule& b) {
  if (a.n != b.n) throw std::invalid_argument("direct_sum: different n");
  FDModule m = a;
  m.idem.insert(m.idem.end(), b.idem.begin(), b.idem.end());
  m.degree.insert(m.degree.end(), b.degree.begin(), b.degree.end());
  m.labels.insert(m.labels.end(), b.labels.begin(), b.labels.end());
  for (int k = 0; k < a.n; ++k) m.X[k] = detail::block_diag(a.X[k], b.X[k]);
  for (int k = 0; k + 1 < a.n; ++k) m.T[k] = detail::block_diag(a.T[k], b.T[k]);
  return m;
}

/// True when f: A -> B (dim B x dim A) intertwines idempotents, x and tau, with degree shift s.
inline bool is_module_hom(const Matrix<Qq>& f, const FDModule& A, const FDModule& B, int s = 0) {
  if (f.rows() != B.dim() || f.cols() != A.dim() || A.n != B.n) return false;
  for (int r = 0; r < B.dim(); ++r)
    for (const auto& [c, v] : f.row(r))
      if (B.idem[r] != A.idem[c] || B.degree[r] != A.degree[c] + s) return false;
  for (int k = 0; k < A.n; ++k)
    if (f * A.X[k] != B.X[k] * f) return false;
  for (int k = 0; k + 1 < A.n; ++k)
    if (f * A.T[k] != B.T[k] * f) return false;
  return true;
}

/// Smallest submodule containing the given vectors (columns of the returned basis matrix).
inline std::vector<SparseVec<Qq>> submodule_generated(const FDModule& M, const std::vector<SparseVec<Qq>>& gens) {
  RowEchelon<Qq> span;
  std::vector<SparseVec<Qq>> basis, queue;
  for (const auto& g : gens)
    if (span.insert(g)) {
      basis.push_back(g);
      queue.push_back(g);
    }
  while (!queue.empty()) {
    SparseVec<Qq> v = queue.back();
    queue.pop_back();
    std::vector<const Matrix<Qq>*> ops;
    for (const auto& x : M.X) ops.push_back(&x);
    for (const auto& t : M.T) ops.push_back(&t);
    for (const auto* op : ops) {
      SparseVec<Qq> u = op->apply(v);
      if (!u.empty() && span.insert(u)) {
        basis.push_back(u);
        queue.push_back(u);
      }
    }
  }
  return basis;
}

/// Submodule spanned by basis vectors (each homogeneous in one e(nu)); returns it with the inclusion.
inline std::pair<FDModule, Matrix<Qq>> submodule_on_basis(const FDModule& M, const std::vector<int>& which) {
  const int s = static_cast<int>(which.size());
  FDModule S = empty_module(M.params, M.n, s);
  Matrix<Qq> inc(M.dim(), s);
  std::map<int, int> pos;
  for (int t = 0; t < s; ++t) {
    const int b = which[t];
    pos[b] = t;
    S.idem.push_back(M.idem[b]);
    S.degree.push_back(M.degree[b]);
    S.labels.push_back(b < static_cast<int>(M.labels.size()) ? M.labels[b] : std::to_string(b));
    inc.set(b, t, Qq(1));
  }
  auto restrict = [&](const Matrix<Qq>& A) {
    Matrix<Qq> r(s, s);
    for (int t = 0; t < s; ++t)
      for (const auto& [c, v] : A.column(which[t])) {
        auto it = pos.find(c);
        if (it == pos.end()) throw std::invalid_argument("submodule_on_basis: span is not stable");
        r.set(it->second, t, v);
      }
    return r;
  };
  for (int k = 0; k < M.n; ++k) S.X[k] = restrict(M.X[k]);
  for (int k = 0; k + 1 < M.n; ++k) S.T[k] = restrict(M.T[k]);
  return {S, inc};
}

/// Quotient by a submodule spanned by basis vectors; returns it with the projection.
inline std::pair<FDModule, Matrix<Qq>> quotient_on_basis(const FDModule& M, const std::vector<int>& which) {
  std::vector<int> keep;
  for (int b = 0; b < M.dim(); ++b)
    if (std::find(which.begin(), which.end(), b) == which.end()) keep.push_back(b);
  const int s = static_cast<int>(keep.size());
  FDModule Q = empty_module(M.params, M.n, s);
  Matrix<Qq> proj(s, M.dim());
  std::map<int, int> pos;
  for (int t = 0; t < s; ++t) {
    const int b = keep[t];
    pos[b] = t;
    Q.idem.push_back(M.idem[b]);
    Q.degree.push_back(M.degree[b]);
    Q.labels.push_back(b < static_cast<int>(M.labels.size()) ? M.labels[b] : std::to_string(b));
    proj.set(t, b, Qq(1));
  }
  auto induced = [&](const Matrix<Qq>& A) {
    Matrix<Qq> r(s, s);
    for (int t = 0; t < s; ++t)
      for (const auto& [c, v] : A.column(keep[t])) {
        auto it = pos.find(c);
        if (it != pos.end()) r.set(it->second, t, v);
      }
    return r;
  };
  for (int k = 0; k < M.n; ++k) Q.X[k] = induced(M.X[k]);
  for (int k = 0; k + 1 < M.n; ++k) Q.T[k] = induced(M.T[k]);
  return {Q, proj};
}

}  // namespace swd
