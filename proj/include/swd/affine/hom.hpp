#pragma once

// Spaces of module homomorphisms between FinModules, by exact linear solve.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "swd/affine/module.hpp"
#include "swd/linalg/echelon.hpp"

namespace swd {

inline std::vector<int> all_generators(int N) {
  std::vector<int> g;
  for (int i = 0; i < N; ++i) g.push_back(i);
  return g;
}

/// Basis of the maps phi: A -> B (dim B x dim A matrices) commuting with K_i
/// and with e_i, f_i for i in `gens` (default: all generators).
template <class F>
std::vector<Matrix<F>> hom_space(const FinModule<F>& A, const FinModule<F>& B, std::vector<int> gens = {}) {
  if (gens.empty()) gens = all_generators(A.N);
  // Unknowns: phi[r][c] with equal weights (forced by the K_i).
  std::map<std::pair<int, int>, int> unknown;
  std::vector<std::pair<int, int>> where;
  for (int r = 0; r < B.dim(); ++r)
    for (int c = 0; c < A.dim(); ++c)
      if (B.weights[r] == A.weights[c]) {
        unknown.emplace(std::pair{r, c}, static_cast<int>(where.size()));
        where.emplace_back(r, c);
      }
  std::map<std::tuple<int, int, int>, SparseVec<F>> eqs;  // (generator slot, r, c) -> row
  auto add = [&](int g, int r, int c, int u, const F& v) {
    auto& row = eqs[{g, r, c}];
    auto it = row.find(u);
    if (it == row.end()) {
      row.emplace(u, v);
    } else {
      it->second = it->second + v;
      if (detail::zero(it->second)) row.erase(it);
    }
  };
  int slot = 0;
  for (int i : gens) {
    for (int which = 0; which < 2; ++which, ++slot) {
      const Matrix<F>& XA = which == 0 ? A.E[i] : A.Fm[i];
      const Matrix<F>& XB = which == 0 ? B.E[i] : B.Fm[i];
      const Matrix<F> XBt = XB.transpose();
      for (std::size_t u = 0; u < where.size(); ++u) {
        auto [r, k] = where[u];
        // (phi X_A)[r][c] gets phi[r][k] X_A[k][c]
        for (const auto& [c, v] : XA.row(k)) add(slot, r, c, static_cast<int>(u), v);
        // -(X_B phi)[r'][k'] with phi[r][k] at (r, k): X_B[r'][r] phi[r][k]
        for (const auto& [rp, v] : XBt.row(r)) add(slot, rp, k, static_cast<int>(u), -v);
      }
    }
  }
  Matrix<F> sys(static_cast<int>(eqs.size()), static_cast<int>(where.size()));
  int e = 0;
  for (auto& [key, row] : eqs) sys.row(e++) = std::move(row);
  std::vector<Matrix<F>> basis;
  for (const auto& x : nullspace(sys)) {
    Matrix<F> phi(B.dim(), A.dim());
    for (const auto& [u, v] : x) phi.set(where[u].first, where[u].second, v);
    basis.push_back(std::move(phi));
  }
  return basis;
}

/// True when phi: A -> B intertwines all e_i, f_i, K_i.
template <class F>
bool is_homomorphism(const Matrix<F>& phi, const FinModule<F>& A, const FinModule<F>& B) {
  for (int i = 0; i < A.N; ++i) {
    if (phi * A.E[i] != B.E[i] * phi) return false;
    if (phi * A.Fm[i] != B.Fm[i] * phi) return false;
    if (phi * A.K(i) != B.K(i) * phi) return false;
  }
  return true;
}

}  // namespace swd
