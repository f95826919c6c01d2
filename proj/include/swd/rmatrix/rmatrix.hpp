#pragma once

// Normalized R-matrices R_{k,l}(z): V(varpi_k) (x) V(varpi_l) -> V(varpi_l) (x) V(varpi_k)
// for U'_q(A_{N-1}^{(1)}), their denominators, unitarity and Yang-Baxter.
//
// Orientation: the first tensor factor carries spectral parameter 1 and the
// second carries z, i.e. z = z_2 / z_1. With this convention the poles of
// R_{k,l} sit at z = (-q)^{|k-l|+2s}, 1 <= s <= min(k, l, N-k, N-l).

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/affine/hom.hpp"
#include "swd/exact/laurent.hpp"
#include "swd/rmatrix/decompose.hpp"

namespace swd {

enum class RMethod { spectral, solver };

inline const char* method_name(RMethod m) { return m == RMethod::spectral ? "spectral" : "solver"; }

struct SpectralTerm {
  Matrix<Qq> map;  // Psi o P_lambda (equal to P_lambda when k = l)
  Qqz scalar;
  WeightVec highest;
};

struct SpectralRMatrix {
  int k = 0, l = 0, N = 0;
  RMethod method = RMethod::solver;
  std::vector<SpectralTerm> terms;  // filled by the spectral method only
  Matrix<Qqz> dense;
};

/// Pole p_s = (-q)^{|k-l|+2s} of the s-th spectral factor.
inline QMonomial spectral_pole(int k, int l, int s) { return QMonomial::neg_q_pow(std::abs(k - l) + 2 * s); }

/// c_i(z) = prod_{s=1}^{i} (1 - p_s z) / (z - p_s).
inline Qqz spectral_factor(int k, int l, int i) {
  const Qqz z = Qqz::var();
  Qqz c(1);
  for (int s = 1; s <= i; ++s) {
    const Qqz p(spectral_pole(k, l, s).value());
    c *= (Qqz(1) - p * z) / (z - p);
  }
  return c;
}

namespace detail {

inline void check_indices(int k, int l, int N) {
  if (N < 2 || k < 1 || l < 1 || k > N - 1 || l > N - 1) {
    throw std::invalid_argument("R-matrix indices out of range: k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                " N=" + std::to_string(N));
  }
}

// The U'_q-isomorphism V_k (x) V_l -> V_l (x) V_k at equal spectral parameters,
// normalized on the dominant pair.
inline Matrix<Qq> swap_isomorphism(int k, int l, int N) {
  auto Vk = fundamental_module(N, k), Vl = fundamental_module(N, l);
  auto H = hom_space(tensor(Vk, Vl), tensor(Vl, Vk));
  if (H.size() != 1) {
    throw InvariantError("swap isomorphism: intertwiner space has dimension " + std::to_string(H.size()));
  }
  const Qq c = H[0].at(0, 0);
  if (is_zero(c)) throw InvariantError("swap isomorphism vanishes on the dominant pair");
  return (Qq(1) / c) * H[0];
}

inline Matrix<Qqz> lift(const Matrix<Qq>& m) {
  return m.map<Qqz>([](const Qq& v) { return Qqz(v); });
}

}  // namespace detail

/// Number of U_q(sl_N) summands of V_k (x) V_l: i runs over 0..min(k, l, N-k, N-l).
inline int summand_count(int k, int l, int N) { return std::min({k, l, N - k, N - l}) + 1; }

/// R = sum_i c_i(z) Psi P_{lambda_i}, lambda_i = varpi_{max+i} + varpi_{min-i},
/// over the summands that occur.
inline SpectralRMatrix rmatrix_spectral(int k, int l, int N) {
  detail::check_indices(k, l, N);
  SpectralRMatrix R;
  R.k = k;
  R.l = l;
  R.N = N;
  R.method = RMethod::spectral;
  auto summands = sl_decompose(k, l, N);
  const int lo = std::min(k, l), hi = std::max(k, l);
  const int count = summand_count(k, l, N);
  if (static_cast<int>(summands.size()) != count) {
    throw InvariantError("spectral R-matrix: expected " + std::to_string(count) + " summands");
  }
  const Matrix<Qq> psi = k == l ? Matrix<Qq>::identity(summands[0].projector.rows()) : detail::swap_isomorphism(k, l, N);
  const int d = psi.rows();
  R.dense = Matrix<Qqz>(d, d);
  for (int i = 0; i < count; ++i) {
    const WeightVec lam = finite_weight_sum(N, hi + i, lo - i);
    auto it = std::find_if(summands.begin(), summands.end(), [&](const Summand& s) { return s.highest == lam; });
    if (it == summands.end()) throw InvariantError("spectral R-matrix: summand " + weight_string(lam) + " missing");
    SpectralTerm t{psi * it->projector, spectral_factor(k, l, i), lam};
    R.dense = R.dense + t.scalar * detail::lift(t.map);
    R.terms.push_back(std::move(t));
  }
  return R;
}

/// Direct solve of the intertwiner equations over Q(q)(z), normalized on the dominant pair.
inline SpectralRMatrix rmatrix_solver(int k, int l, int N) {
  detail::check_indices(k, l, N);
  SpectralRMatrix R;
  R.k = k;
  R.l = l;
  R.N = N;
  R.method = RMethod::solver;
  auto M1 = fundamental_module<Qqz>(N, k);
  auto M2 = affinize(fundamental_module(N, l));
  auto H = hom_space(tensor(M1, M2), tensor(M2, M1));
  if (H.size() != 1) {
    throw InvariantError("R-matrix solver: intertwiner space has dimension " + std::to_string(H.size()) +
                         " (expected 1 for generic z)");
  }
  const Qqz c = H[0].at(0, 0);
  if (is_zero(c)) throw InvariantError("R-matrix solver: intertwiner vanishes on the dominant pair");
  R.dense = (Qqz(1) / c) * H[0];
  return R;
}

inline SpectralRMatrix normalized_rmatrix(int k, int l, int N, RMethod method = RMethod::solver) {
  return method == RMethod::spectral ? rmatrix_spectral(k, l, N) : rmatrix_solver(k, l, N);
}

struct DenominatorPoly {
  UPoly<Qq> poly;                              // monic in z
  std::vector<std::pair<QMonomial, int>> roots;  // (root, multiplicity) with roots (-q)^m
  UPoly<Qq> residual;                          // part not split into such roots (1 when fully split)

  std::string factored() const {
    std::string s;
    for (const auto& [r, mult] : roots) {
      std::string f = "(z - " + r.to_string() + ")";
      s += (s.empty() ? "" : "*") + f + (mult > 1 ? "^" + std::to_string(mult) : "");
    }
    if (!residual.is_one()) s += (s.empty() ? "" : "*") + ("(" + residual.to_string("z") + ")");
    return s.empty() ? "1" : s;
  }
};

/// Split p into factors z - (-q)^m for |m| <= bound, leaving the rest as residual.
inline DenominatorPoly factor_denominator(const UPoly<Qq>& p, int bound) {
  DenominatorPoly d;
  d.poly = p.monic();
  UPoly<Qq> rest = d.poly;
  for (int m = -bound; m <= bound; ++m) {
    if (rest.degree() < 1) break;
    const QMonomial r = QMonomial::neg_q_pow(m);
    const int mult = root_multiplicity(rest, r.value());
    if (mult == 0) continue;
    for (int t = 0; t < mult; ++t) rest = rest.exact_div(UPoly<Qq>::linear(r.value()));
    d.roots.emplace_back(r, mult);
  }
  d.residual = rest.monic();
  return d;
}

/// Least common multiple of the z-denominators of all entries.
inline UPoly<Qq> entry_denominator_lcm(const Matrix<Qqz>& m) {
  UPoly<Qq> acc(Qq(1));
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) acc = lcm(acc, v.den());
  return acc.monic();
}

inline DenominatorPoly denominator(const SpectralRMatrix& R) {
  return factor_denominator(entry_denominator_lcm(R.dense), 2 * R.N + 2);
}

inline DenominatorPoly denominator(int k, int l, int N) { return denominator(rmatrix_solver(k, l, N)); }

/// prod_{s=1}^{smax} (z - (-q)^{|k-l|+2s}).
inline UPoly<Qq> pole_product(int k, int l, int smax) {
  UPoly<Qq> p(Qq(1));
  for (int s = 1; s <= smax; ++s) p = p * UPoly<Qq>::linear(spectral_pole(k, l, s).value());
  return p;
}

/// Substitute z -> 1/z.
inline Qqz invert_argument(const Qqz& f) {
  return f.eval(Qqz(1) / Qqz::var(), [](const Qq& c) { return Qqz(c); });
}

inline Matrix<Qqz> invert_argument(const Matrix<Qqz>& m) {
  return m.map<Qqz>([](const Qqz& v) { return invert_argument(v); });
}

/// R_{l,k}(1/z) R_{k,l}(z) == id.
inline bool unitarity_holds(const Matrix<Qqz>& Rkl, const Matrix<Qqz>& Rlk) {
  return invert_argument(Rlk) * Rkl == Matrix<Qqz>::identity(Rkl.cols());
}

inline bool verify_unitarity(int k, int l, int N, RMethod method = RMethod::solver) {
  auto Rkl = normalized_rmatrix(k, l, N, method);
  auto Rlk = k == l ? Rkl : normalized_rmatrix(l, k, N, method);
  return unitarity_holds(Rkl.dense, Rlk.dense);
}

/// Polynomials in w with coefficients in Q(q)[z].
using ZWPoly = UPoly<UPoly<Qq>>;

/// d(z) R(z) with d the entry-denominator lcm: a matrix over Q(q)[z].
inline Matrix<UPoly<Qq>> clear_denominators(const Matrix<Qqz>& R, const UPoly<Qq>& d) {
  return R.map<UPoly<Qq>>([&](const Qqz& v) { return v.num() * d.exact_div(v.den()); });
}

namespace detail {
// p(z) as a constant in w; p(w); p(z w).
inline ZWPoly in_z(const UPoly<Qq>& p) { return ZWPoly(p); }
inline ZWPoly in_w(const UPoly<Qq>& p) {
  std::vector<UPoly<Qq>> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return ZWPoly(std::move(c));
}
inline ZWPoly in_zw(const UPoly<Qq>& p) {
  std::vector<UPoly<Qq>> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(UPoly<Qq>::monomial(p.coeff(i), i));
  return ZWPoly(std::move(c));
}
}  // namespace detail

/// Both sides of the Yang-Baxter equation on V_k (x) V_l (x) V_m with spectral
/// parameters (1, z, z w):
///   (R_23 (x) 1)(1 (x) R_13)(R_12 (x) 1)  and  (1 (x) R_12)(R_13 (x) 1)(1 (x) R_23),
/// where R_ab = R_{M_a,M_b}(z_b / z_a). Each R is replaced by its cleared
/// numerator d(x) R(x); both sides then carry the same scalar factor
/// d_kl(z) d_km(zw) d_lm(w), so the identity is equivalent to equality of the
/// returned polynomial matrices.
inline std::pair<Matrix<ZWPoly>, Matrix<ZWPoly>> ybe_sides(const Matrix<Qqz>& Rkl, const Matrix<Qqz>& Rlm,
                                                           const Matrix<Qqz>& Rkm, int dk, int dl, int dm) {
  auto num = [](const Matrix<Qqz>& R) { return clear_denominators(R, entry_denominator_lcm(R)); };
  const auto Pkl = num(Rkl), Plm = num(Rlm), Pkm = num(Rkm);
  const auto R12 = Pkl.map<ZWPoly>(detail::in_z);
  const auto R23 = Plm.map<ZWPoly>(detail::in_w);
  const auto R13 = Pkm.map<ZWPoly>(detail::in_zw);
  auto I = [](int n) { return Matrix<ZWPoly>::identity(n); };
  Matrix<ZWPoly> lhs = kron(R23, I(dk)) * (kron(I(dl), R13) * kron(R12, I(dm)));
  Matrix<ZWPoly> rhs = kron(I(dm), R12) * (kron(R13, I(dl)) * kron(I(dk), R23));
  return {std::move(lhs), std::move(rhs)};
}

inline bool verify_ybe(int k, int l, int m, int N, RMethod method = RMethod::solver) {
  auto dimk = fundamental_module(N, k).dim(), diml = fundamental_module(N, l).dim(),
       dimm = fundamental_module(N, m).dim();
  auto [lhs, rhs] = ybe_sides(normalized_rmatrix(k, l, N, method).dense, normalized_rmatrix(l, m, N, method).dense,
                              normalized_rmatrix(k, m, N, method).dense, dimk, diml, dimm);
  return lhs == rhs;
}

}  // namespace swd
