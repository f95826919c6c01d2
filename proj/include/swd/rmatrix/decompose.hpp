#pragma once

// Decomposition of V(varpi_k) (x) V(varpi_l) under U_q(sl_N) (generators
// 1..N-1): highest weight vectors, their f-closures, and the projectors.

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/affine/module.hpp"
#include "swd/linalg/echelon.hpp"

namespace swd {

struct Summand {
  WeightVec highest;                     // full weight (h_0..h_{N-1}) of the highest weight vector
  SparseVec<Qq> hw;                      // highest weight vector
  std::vector<SparseVec<Qq>> basis;      // f-closure basis, basis[0] = hw
  std::vector<std::vector<int>> words;   // basis[t] = f_{w_last} ... f_{w_0} hw for words[t] = (w_0, ...)
  Matrix<Qq> projector;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Finite part varpi_a + varpi_b as a full level-0 weight (varpi_0 = varpi_N = 0).
inline WeightVec finite_weight_sum(int N, int a, int b) {
  WeightVec w(static_cast<std::size_t>(N), 0);
  if (a > 0 && a < N) w[a] += 1;
  if (b > 0 && b < N) w[b] += 1;
  int s = 0;
  for (int i = 1; i < N; ++i) s += w[i];
  w[0] = -s;
  return w;
}

/// Apply a word of f's (first letter first) to v.
inline SparseVec<Qq> apply_f_word(const FinModule<Qq>& m, const std::vector<int>& word, SparseVec<Qq> v) {
  for (int i : word) v = m.Fm[i].apply(v);
  return v;
}

/// Decompose a module under the finite-type subalgebra; summands sorted by
/// decreasing highest weight (lexicographic on h_{N-1}, ..., h_1 reversed).
inline std::vector<Summand> sl_decompose_module(const FinModule<Qq>& T) {
  const int N = T.N, d = T.dim();
  std::vector<Summand> out;
  std::map<WeightVec, std::vector<int>> spaces;
  for (int b = 0; b < d; ++b) spaces[T.weights[b]].push_back(b);
  for (const auto& [w, idx] : spaces) {
    bool dominant = true;
    for (int i = 1; i < N; ++i) dominant = dominant && w[i] >= 0;
    if (!dominant) continue;
    // kernel of all e_i (i >= 1) on the weight space
    std::vector<SparseVec<Qq>> rows;
    for (int i = 1; i < N; ++i) {
      for (int r = 0; r < d; ++r) {
        SparseVec<Qq> row;
        for (std::size_t t = 0; t < idx.size(); ++t) {
          Qq v = T.E[i].at(r, idx[t]);
          if (!is_zero(v)) row.emplace(static_cast<int>(t), v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    auto ker = nullspace(Matrix<Qq>::from_rows(rows, static_cast<int>(idx.size())));
    for (const auto& kv : ker) {
      Summand s;
      s.highest = w;
      for (const auto& [t, v] : kv) s.hw.emplace(idx[t], v);
      out.push_back(std::move(s));
    }
  }
  for (auto& s : out) {
    RowEchelon<Qq> span;
    std::deque<std::pair<SparseVec<Qq>, std::vector<int>>> queue{{s.hw, {}}};
    span.insert(s.hw);
    s.basis.push_back(s.hw);
    s.words.emplace_back();
    while (!queue.empty()) {
      auto [v, word] = queue.front();
      queue.pop_front();
      for (int i = 1; i < N; ++i) {
        SparseVec<Qq> u = T.Fm[i].apply(v);
        if (u.empty() || !span.insert(u)) continue;
        auto w2 = word;
        w2.push_back(i);
        s.basis.push_back(u);
        s.words.push_back(w2);
        queue.emplace_back(u, w2);
      }
    }
  }
  int total = 0;
  for (const auto& s : out) total += s.dim();
  if (total != d) {
    throw InvariantError("sl_decompose: summands have total dimension " + std::to_string(total) + ", expected " +
                         std::to_string(d));
  }
  std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    return std::lexicographical_compare(b.highest.rbegin(), b.highest.rend(), a.highest.rbegin(), a.highest.rend());
  });
  // projectors P = B D B^{-1}
  Matrix<Qq> B(d, d);
  int col = 0;
  for (const auto& s : out)
    for (const auto& v : s.basis) {
      for (const auto& [r, x] : v) B.set(r, col, x);
      ++col;
    }
  const Matrix<Qq> Binv = inverse(B);
  col = 0;
  for (auto& s : out) {
    Matrix<Qq> D(d, d);
    for (int t = 0; t < s.dim(); ++t, ++col) D.set(col, col, Qq(1));
    s.projector = B * D * Binv;
  }
  return out;
}

/// Summands of V(varpi_k) (x) V(varpi_l) for U_q(sl_N).
inline std::vector<Summand> sl_decompose(int k, int l, int N) {
  return sl_decompose_module(tensor(fundamental_module(N, k), fundamental_module(N, l)));
}

}  // namespace swd
