#pragma once

// Exact verification of the KLR defining relations in the polynomial
// representation, on all inputs x^alpha e(nu) with |alpha| <= D.

#include <string>
#include <vector>

#include "swd/klr/polyrep.hpp"

namespace swd {

struct KLRReport {
  int n = 0;
  int cap = 0;
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Correction polynomial of the braid relation for nu_k = nu_{k+2}:
/// (Q(x_k, x_{k+1}) - Q(x_{k+2}, x_{k+1})) / (x_k - x_{k+2}), 0-based k.
inline Poly braid_correction(const KLRParams& p, int n, int i, int j, int k) {
  Poly num = p.Q(i, j, n, k, k + 1) - p.Q(i, j, n, k + 2, k + 1);
  return num.divide_by_difference(k, k + 2);
}

inline KLRReport verify_klr_relations(const KLRParams& params, int n, int D) {
  KLRReport rep{n, D, 0, {}};
  const PolyRep R(params, n);
  const auto seqs = all_sequences(params.size(), n);
  auto fail = [&](const std::string& what, const Seq& nu, const Exponent& e) {
    if (rep.failures.size() >= 50) return;
    std::string mono;
    for (int v : e) mono += (mono.empty() ? "" : ",") + std::to_string(v);
    rep.failures.push_back(what + " on x^(" + mono + ") e" + seq_string(nu));
  };
  auto check = [&](bool ok, const std::string& what, const Seq& nu, const Exponent& e) {
    ++rep.checked;
    if (!ok) fail(what, nu, e);
  };
  for (const auto& nu : seqs) {
    for (const auto& e : monomials_up_to(n, D)) {
      const PolyElem v = R.basis(nu, e);
      const int dv = R.degree(nu, e);
      // idempotents
      for (const auto& mu : seqs) {
        const PolyElem ev = R.idem(mu, v);
        check(mu == nu ? ev == v : ev.empty(), "e(mu)e(nu) = delta e(nu) [mu=" + seq_string(mu) + "]", nu, e);
      }
      // x relations and grading of x
      for (int k = 0; k < n; ++k) {
        const PolyElem xv = R.x(k, v);
        auto [hom, deg] = R.homogeneous_degree(xv);
        check(hom && deg == dv + 2, "deg x" + std::to_string(k + 1) + " = 2", nu, e);
        check(R.idem(nu, xv) == xv, "x" + std::to_string(k + 1) + " e(nu) = e(nu) x", nu, e);
        for (int m = k + 1; m < n; ++m)
          check(R.x(m, xv) == R.x(k, R.x(m, v)), "x" + std::to_string(k + 1) + " x" + std::to_string(m + 1) + " commute",
                nu, e);
      }
      for (int a = 0; a + 1 < n; ++a) {
        const std::string ta = "tau" + std::to_string(a + 1);
        const int i = nu[static_cast<std::size_t>(a)], j = nu[static_cast<std::size_t>(a) + 1];
        const PolyElem tv = R.tau(a, v);
        // tau_a e(nu) = e(s_a nu) tau_a and grading
        check(R.idem(swap_places(nu, a), tv) == tv, ta + " e(nu) = e(s nu) " + ta, nu, e);
        if (!tv.empty()) {
          auto [hom, deg] = R.homogeneous_degree(tv);
          check(hom && deg == dv + R.tau_degree(a, nu), "deg " + ta + " e(nu)", nu, e);
        }
        // tau_a^2 e(nu) = Q(x_a, x_{a+1}) e(nu)
        check(R.tau(a, tv) == R.times(params.Q(i, j, n, a, a + 1), v), ta + "^2 = Q", nu, e);
        // (tau_a x_m - x_{s_a(m)} tau_a) e(nu)
        for (int m = 0; m < n; ++m) {
          const int sm = m == a ? a + 1 : m == a + 1 ? a : m;
          PolyElem lhs = R.tau(a, R.x(m, v)) - R.x(sm, tv);
          PolyElem rhs;
          if (i == j && m == a) rhs = PolyElem{} - v;
          if (i == j && m == a + 1) rhs = v;
          check(lhs == rhs, ta + " x" + std::to_string(m + 1) + " straightening", nu, e);
        }
        // distant taus commute
        for (int b = a + 2; b + 1 < n; ++b)
          check(R.tau(a, R.tau(b, v)) == R.tau(b, R.tau(a, v)), ta + " tau" + std::to_string(b + 1) + " commute", nu, e);
        // braid
        if (a + 2 < n) {
          const int l = nu[static_cast<std::size_t>(a) + 2];
          PolyElem lhs = R.tau(a + 1, R.tau(a, R.tau(a + 1, v))) - R.tau(a, R.tau(a + 1, R.tau(a, v)));
          PolyElem rhs;
          if (i == l) rhs = R.times(braid_correction(params, n, i, j, a), v);
          check(lhs == rhs, "braid at " + std::to_string(a + 1), nu, e);
        }
      }
    }
  }
  return rep;
}

}  // namespace swd
