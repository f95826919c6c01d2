#pragma once

// Exact verification of the defining relations of U'_q on a FinModule.

#include <string>
#include <vector>

#include "swd/affine/module.hpp"

namespace swd {

struct RelationReport {
  std::vector<std::string> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};

template <class F>
RelationReport check_defining_relations(const FinModule<F>& m) {
  RelationReport rep;
  const int N = m.N, d = m.dim();
  auto fail = [&](std::string what) { rep.failures.push_back(std::move(what)); };
  auto check = [&](bool good, const std::string& what) {
    ++rep.checked;
    if (!good) fail(what);
  };
  if (static_cast<int>(m.E.size()) != N || static_cast<int>(m.Fm.size()) != N) {
    fail("generator count differs from N");
    return rep;
  }
  for (const auto& w : m.weights) check(level(w) == 0, "weight " + weight_string(w) + " has nonzero level");

  const auto a = affine_cartan(N);
  const F qq = q_pow<F>(1);
  const F qdiff = qq - F(1) / qq;
  std::vector<Matrix<F>> K, Kinv;
  for (int i = 0; i < N; ++i) {
    K.push_back(m.K(i));
    Kinv.push_back(m.K(i, -1));
  }
  const auto id = Matrix<F>::identity(d);
  for (int i = 0; i < N; ++i) {
    const std::string si = std::to_string(i);
    check(K[i] * Kinv[i] == id, "K_" + si + " K_" + si + "^-1 = 1");
    for (int j = 0; j < N; ++j) {
      const std::string sj = std::to_string(j);
      const F qa = q_pow<F>(a[i][j]);
      check(K[i] * m.E[j] == qa * (m.E[j] * K[i]), "K_" + si + " e_" + sj + " K_" + si + "^-1 = q^a e_" + sj);
      check(K[i] * m.Fm[j] == (F(1) / qa) * (m.Fm[j] * K[i]),
            "K_" + si + " f_" + sj + " K_" + si + "^-1 = q^-a f_" + sj);
      Matrix<F> expect = i == j ? (F(1) / qdiff) * (K[i] - Kinv[i]) : Matrix<F>(d, d);
      check(commutator(m.E[i], m.Fm[j]) == expect, "[e_" + si + ", f_" + sj + "]");
      if (i == j) continue;
      // quantum Serre relations of order b = 1 - a_ij
      const int b = 1 - a[i][j];
      for (int which = 0; which < 2; ++which) {
        const auto& X = which == 0 ? m.E : m.Fm;
        Matrix<F> sum(d, d);
        std::vector<Matrix<F>> pw{id};
        for (int r = 1; r <= b; ++r) pw.push_back(pw.back() * X[i]);
        for (int r = 0; r <= b; ++r) {
          F c = embed<F>(quantum_binomial(b, r).to_qq());
          if (r % 2) c = -c;
          sum = sum + c * (pw[b - r] * X[j] * pw[r]);
        }
        check(sum.is_zero(), std::string("Serre ") + (which == 0 ? "e" : "f") + "_" + si + "^" + std::to_string(b) +
                                 " " + (which == 0 ? "e" : "f") + "_" + sj);
      }
    }
  }
  return rep;
}

}  // namespace swd
