#pragma once

// The functor M -> V^ (x)_{R^I(n)} M into finite-dimensional U'_q-modules.
//
// Slices: for each nu, (V_{S(nu_1)} (x) ... (x) V_{S(nu_n)}) (x) e(nu)M, where
// the spectral parameter of factor a acts on the M side as X(nu_a)(1 + x_a).
// Right action of tau_a from e(mu) to e(s_a mu), in the target labelling:
//   unequal colors: R_{S(mu_a),S(mu_{a+1})}(z) on factors a, a+1, then
//                   multiplication by (x_a - x_{a+1})^{d_{mu_a mu_{a+1}}};
//   equal colors:   (R(z) - 1) / (x_a - x_{a+1}),
// with z = X_a / X_{a+1} (second spectral parameter over the first) expanded
// around X(mu_{a+1}) / X(mu_a).

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "swd/affine/hom.hpp"
#include "swd/affine/relations.hpp"
#include "swd/exact/truncpoly.hpp"
#include "swd/klr/ses.hpp"
#include "swd/quiver/quiver.hpp"
#include "swd/rmatrix/rmatrix.hpp"

namespace swd {

inline constexpr const char* kZOrientation =
    "tau_a applies R_{S(nu_a),S(nu_{a+1})}(z) with z = X_a/X_{a+1} in the target slice, expanded at X(nu_{a+1})/X(nu_a)";

struct SWDContext {
  int N = 0;
  std::vector<SpectralIndex> I;
  Quiver quiver;
  KLRParams params;

  int S(int i) const { return I[static_cast<std::size_t>(i)].k; }
  const QMonomial& X(int i) const { return I[static_cast<std::size_t>(i)].X; }
};

inline SWDContext make_context(const std::vector<SpectralIndex>& I, int N,
                               const DenominatorSource& den = solver_denominator) {
  SWDContext c;
  c.N = N;
  c.I = I;
  c.quiver = build_quiver(I, N, den);
  c.params = klr_params(c.quiver);
  return c;
}

using X12 = RatFun<RatFun<Qq, VarX<1>>, VarX<2>>;
using Series = TruncPoly<Qq>;

/// Local tau kernel on factors (a, a+1): entries (target pair, source pair) -> series in (x_a, x_{a+1}).
struct TauKernel {
  bool equal = false;
  int src_dim_a = 0, src_dim_b = 0;  // dims of the source factors a, a+1
  std::map<std::pair<int, int>, Series> G;
};

namespace detail {

inline const Matrix<Qqz>& cached_rmatrix(int k, int l, int N) {
  static std::map<std::tuple<int, int, int>, Matrix<Qqz>> memo;
  auto key = std::tuple{k, l, N};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, normalized_rmatrix(k, l, N).dense).first->second;
}

inline X12 at_ratio(const UPoly<Qq>& p, const X12& z) {
  X12 acc(0);
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + X12(RatFun<Qq, VarX<1>>(*it));
  return acc;
}

inline X12 at_ratio(const Qqz& f, const X12& z) { return at_ratio(f.num(), z) / at_ratio(f.den(), z); }

inline int fundamental_dim(int N, int k) { return static_cast<int>(k_subsets(N, k).size()); }

}  // namespace detail

/// Kernel of tau_a on a slice mu (source), expanded to the given orders in (x_a, x_{a+1}).
inline TauKernel tau_kernel(const SWDContext& c, int i, int j, const std::vector<int>& orders) {
  static std::map<std::tuple<int, int, int, int, int, int, int, int, std::vector<int>>, TauKernel> memo;
  const int k = c.S(i), l = c.S(j);
  const int dij = c.params.d[i][j];
  auto key = std::tuple{c.N, k, l, c.X(i).m, c.X(j).m, dij, i == j ? 1 : 0, 0, orders};
  if (c.X(i).c == 1 && c.X(j).c == 1) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  TauKernel K;
  K.equal = i == j;
  K.src_dim_a = detail::fundamental_dim(c.N, k);
  K.src_dim_b = detail::fundamental_dim(c.N, l);
  const Matrix<Qqz>& R = detail::cached_rmatrix(k, l, c.N);
  const X12 X1(RatFun<Qq, VarX<1>>::var());
  const X12 X2 = X12::var();
  const X12 z = X1 / X2;
  // target factor a carries anchor X(j), factor a+1 carries X(i)
  const std::vector<QMonomial> anchors{c.X(j), c.X(i)};
  X12 extra(1);
  if (!K.equal) {
    const X12 lin = X1 / X12(RatFun<Qq, VarX<1>>(c.X(j).value())) - X2 / X12(RatFun<Qq, VarX<1>>(c.X(i).value()));
    for (int t = 0; t < dij; ++t) extra = extra * lin;
  } else {
    extra = X12(RatFun<Qq, VarX<1>>(c.X(i).value())) / (X1 - X2);
  }
  for (int r = 0; r < R.rows(); ++r) {
    for (int s = 0; s < R.cols(); ++s) {
      const Qqz entry = R.at(r, s);
      const bool diag = K.equal && r == s;
      if (detail::zero(entry) && !diag) continue;
      X12 f = detail::at_ratio(entry, z);
      if (K.equal) f = (diag ? f - X12(1) : f) * extra;
      else f = f * extra;
      if (detail::zero(f)) continue;
      Series g;
      try {
        g = trunc_eval(f, anchors, orders);
      } catch (const PoleError& e) {
        throw InvariantError(std::string("tau kernel has a pole after the P-factor: ") + e.what());
      }
      if (!g.is_zero()) K.G.emplace(std::pair{r, s}, std::move(g));
    }
  }
  if (c.X(i).c == 1 && c.X(j).c == 1) memo.emplace(key, K);
  return K;
}

/// Tensor shape of V_nu.
struct SliceShape {
  std::vector<int> dims;
  int total() const {
    int t = 1;
    for (int d : dims) t *= d;
    return t;
  }
  std::vector<int> digits(int v) const {
    std::vector<int> out(dims.size());
    for (std::size_t p = dims.size(); p-- > 0;) {
      out[p] = v % dims[p];
      v /= dims[p];
    }
    return out;
  }
  int index(const std::vector<int>& dg) const {
    int v = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) v = v * dims[p] + dg[p];
    return v;
  }
};

inline SliceShape slice_shape(const SWDContext& c, const Seq& nu) {
  SliceShape s;
  for (int v : nu) s.dims.push_back(detail::fundamental_dim(c.N, c.S(v)));
  return s;
}

/// Kernel action on a basis vector v of V_mu: returns (target basis index, series) pairs in V_{s_a mu}.
inline std::vector<std::pair<int, const Series*>> apply_kernel(const TauKernel& K, const SliceShape& src, int a, int v) {
  auto dg = src.digits(v);
  const int s = dg[a] * K.src_dim_b + dg[a + 1];
  SliceShape tgt = src;
  std::swap(tgt.dims[a], tgt.dims[a + 1]);
  std::vector<std::pair<int, const Series*>> out;
  for (auto it = K.G.lower_bound({0, 0}); it != K.G.end(); ++it) {
    if (it->first.second != s) continue;
    const int r = it->first.first;
    auto tg = dg;
    tg[a] = r / K.src_dim_a;
    tg[a + 1] = r % K.src_dim_a;
    out.emplace_back(tgt.index(tg), &it->second);
  }
  return out;
}

/// Per-factor pieces of e_0 and f_0 on V_nu: K_0 (x)...(x) e_0 (x) 1 ... and 1 ... (x) f_0 (x) K_0^{-1} ...
struct SliceOperators {
  FinModule<Qq> V;                      // the plain tensor product
  std::vector<Matrix<Qq>> E0, F0;       // one per factor
};

inline SliceOperators slice_operators(const SWDContext& c, const Seq& nu) {
  static std::map<std::pair<int, Seq>, SliceOperators> memo;
  Seq ks;
  for (int v : nu) ks.push_back(c.S(v));
  auto key = std::pair{c.N, ks};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  SliceOperators out;
  std::vector<FinModule<Qq>> f;
  for (int k : ks) f.push_back(fundamental_module(c.N, k));
  out.V = f[0];
  for (std::size_t p = 1; p < f.size(); ++p) out.V = tensor(out.V, f[p]);
  for (std::size_t a = 0; a < f.size(); ++a) {
    Matrix<Qq> e = Matrix<Qq>::identity(1), g = Matrix<Qq>::identity(1);
    for (std::size_t p = 0; p < f.size(); ++p) {
      const int d = f[p].dim();
      e = kron(e, p < a ? f[p].K(0) : p == a ? f[p].E[0] : Matrix<Qq>::identity(d));
      g = kron(g, p < a ? Matrix<Qq>::identity(d) : p == a ? f[p].Fm[0] : f[p].K(0, -1));
    }
    out.E0.push_back(std::move(e));
    out.F0.push_back(std::move(g));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

struct FunctorOutput {
  FinModule<Qq> module;
  int total_dim = 0;
  int relation_rank = 0;
  std::vector<Seq> slices;
  std::vector<int> offsets;          // start of each slice in the total space
  std::vector<int> quotient_cols;    // total-space coordinates kept as quotient basis
  RowEchelon<Qq> relations;
  std::vector<std::string> metadata;

  int dim() const { return module.dim(); }
  /// Quotient coordinates of a total-space vector.
  SparseVec<Qq> project(const SparseVec<Qq>& t) const {
    SparseVec<Qq> r;
    for (const auto& [col, v] : relations.reduce(t)) {
      auto it = std::lower_bound(quotient_cols.begin(), quotient_cols.end(), col);
      if (it == quotient_cols.end() || *it != col) throw InvariantError("project: remainder hits a pivot column");
      r.emplace(static_cast<int>(it - quotient_cols.begin()), v);
    }
    return r;
  }
};

namespace detail {

inline std::vector<int> block_indices(const FDModule& M, const Seq& nu) {
  std::vector<int> b;
  for (int t = 0; t < M.dim(); ++t)
    if (M.idem[t] == nu) b.push_back(t);
  return b;
}

inline Matrix<Qq> restrict_block(const Matrix<Qq>& A, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::map<int, int> rpos;
  for (std::size_t t = 0; t < rows.size(); ++t) rpos[rows[t]] = static_cast<int>(t);
  Matrix<Qq> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t t = 0; t < cols.size(); ++t)
    for (const auto& [row, v] : A.column(cols[t])) {
      auto it = rpos.find(row);
      if (it != rpos.end()) r.set(it->second, static_cast<int>(t), v);
    }
  return r;
}

inline int nilpotency_order(const Matrix<Qq>& x) {
  if (x.rows() == 0) return 1;
  Matrix<Qq> p = Matrix<Qq>::identity(x.rows());
  for (int k = 1; k <= x.rows() + 1; ++k) {
    p = p * x;
    if (p.is_zero()) return k;
  }
  throw InvariantError("x is not nilpotent on the module");
}

/// X(nu_a)(1 + x)^{power} for power = +1 or -1, with x nilpotent.
inline Matrix<Qq> spectral_action(const QMonomial& anchor, const Matrix<Qq>& x, int power) {
  const int d = x.rows();
  const Matrix<Qq> I = Matrix<Qq>::identity(d);
  if (power == 1) return anchor.value() * (I + x);
  Matrix<Qq> acc = I, term = I;
  for (int t = 1; t <= d; ++t) {
    term = Qq(-1) * (term * x);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return anchor.inverse().value() * acc;
}

/// Series acting on the M side through two nilpotent matrices.
inline Matrix<Qq> series_action(const Series& g, const Matrix<Qq>& xa, const Matrix<Qq>& xb) {
  const int d = xa.rows();
  Matrix<Qq> acc(d, d);
  std::vector<Matrix<Qq>> pa{Matrix<Qq>::identity(d)}, pb{Matrix<Qq>::identity(d)};
  g.for_each([&](const Exponent& e, const Qq& c) {
    if (detail::zero(c)) return;
    while (static_cast<int>(pa.size()) <= e[0]) pa.push_back(pa.back() * xa);
    while (static_cast<int>(pb.size()) <= e[1]) pb.push_back(pb.back() * xb);
    acc = acc + c * (pa[e[0]] * pb[e[1]]);
  });
  return acc;
}

}  // namespace detail

/// v (x) m -> (v tau_a) (x) m, from V_{s_a nu} (x) e(nu)M to V_nu (x) e(nu)M.
inline Matrix<Qq> tau_on_slice(const SWDContext& c, const Seq& nu, int a, const FDModule& M) {
  const Seq mu = swap_places(nu, a);
  const auto block = detail::block_indices(M, nu);
  const int w = static_cast<int>(block.size());
  const Matrix<Qq> xa = detail::restrict_block(M.X[a], block, block);
  const Matrix<Qq> xb = detail::restrict_block(M.X[a + 1], block, block);
  const std::vector<int> orders{detail::nilpotency_order(xa), detail::nilpotency_order(xb)};
  const TauKernel K = tau_kernel(c, mu[a], mu[a + 1], orders);
  const SliceShape src = slice_shape(c, mu);
  const int dv = src.total();
  Matrix<Qq> out(slice_shape(c, nu).total() * w, dv * w);
  std::map<const Series*, Matrix<Qq>> acted;
  for (int v = 0; v < dv; ++v)
    for (const auto& [tv, g] : apply_kernel(K, src, a, v)) {
      auto it = acted.find(g);
      if (it == acted.end()) it = acted.emplace(g, detail::series_action(*g, xa, xb)).first;
      for (int m = 0; m < w; ++m)
        for (const auto& [m2, val] : it->second.column(m)) out.add(tv * w + m2, v * w + m, val);
    }
  return out;
}

inline FunctorOutput functor_apply(const SWDContext& c, const FDModule& M) {
  const auto rep = check_klr_module(M);
  if (!rep.ok()) throw std::invalid_argument("functor_apply: module fails " + rep.failures.front());
  const int n = M.n, N = c.N;
  FunctorOutput out;
  out.metadata.push_back(std::string("coproduct: e -> e(x)1 + K(x)e, f -> f(x)K^-1 + 1(x)f"));
  out.metadata.push_back(std::string("z-orientation: ") + kZOrientation);
  out.slices = M.support();
  std::map<Seq, int> slot;
  std::map<Seq, std::vector<int>> blocks;
  int total = 0;
  for (std::size_t s = 0; s < out.slices.size(); ++s) {
    const Seq& nu = out.slices[s];
    slot[nu] = static_cast<int>(s);
    blocks[nu] = detail::block_indices(M, nu);
    out.offsets.push_back(total);
    total += slice_shape(c, nu).total() * static_cast<int>(blocks[nu].size());
  }
  out.total_dim = total;
  // left action on the total space
  std::vector<Matrix<Qq>> E(static_cast<std::size_t>(N), Matrix<Qq>(total, total)), Fm = E;
  std::vector<WeightVec> weights(static_cast<std::size_t>(total));
  std::vector<std::string> labels(static_cast<std::size_t>(total));
  auto place = [&](Matrix<Qq>& dst, const Matrix<Qq>& blk, int off) {
    for (int r = 0; r < blk.rows(); ++r)
      for (const auto& [col, v] : blk.row(r)) dst.add(off + r, off + col, v);
  };
  for (std::size_t s = 0; s < out.slices.size(); ++s) {
    const Seq& nu = out.slices[s];
    const auto& blk = blocks[nu];
    const int w = static_cast<int>(blk.size());
    const SliceOperators ops = slice_operators(c, nu);
    const Matrix<Qq> Iw = Matrix<Qq>::identity(w);
    for (int i = 1; i < N; ++i) {
      place(E[i], kron(ops.V.E[i], Iw), out.offsets[s]);
      place(Fm[i], kron(ops.V.Fm[i], Iw), out.offsets[s]);
    }
    for (int a = 0; a < n; ++a) {
      const Matrix<Qq> xa = detail::restrict_block(M.X[a], blk, blk);
      place(E[0], kron(ops.E0[a], detail::spectral_action(c.X(nu[a]), xa, 1)), out.offsets[s]);
      place(Fm[0], kron(ops.F0[a], detail::spectral_action(c.X(nu[a]), xa, -1)), out.offsets[s]);
    }
    for (int v = 0; v < ops.V.dim(); ++v)
      for (int m = 0; m < w; ++m) {
        weights[out.offsets[s] + v * w + m] = ops.V.weights[v];
        labels[out.offsets[s] + v * w + m] = ops.V.labels[v] + "|" + (blk[m] < static_cast<int>(M.labels.size()) ? M.labels[blk[m]] : std::to_string(blk[m]));
      }
  }
  // relations (v tau_a) (x) m - v (x) tau_a m for m in e(nu)M, v in V_{s_a nu}
  for (const auto& nu : out.slices) {
    const auto& blk = blocks[nu];
    const int w = static_cast<int>(blk.size());
    const int off_nu = out.offsets[slot[nu]];
    for (int a = 0; a + 1 < n; ++a) {
      const Seq mu = swap_places(nu, a);
      const Matrix<Qq> Tv = tau_on_slice(c, nu, a, M);
      const int dv = slice_shape(c, mu).total();
      const bool mu_present = slot.count(mu) > 0;
      Matrix<Qq> tm;
      int wm = 0, off_mu = 0;
      if (mu_present) {
        tm = detail::restrict_block(M.T[a], blocks[mu], blk);
        wm = static_cast<int>(blocks[mu].size());
        off_mu = out.offsets[slot[mu]];
      }
      for (int v = 0; v < dv; ++v)
        for (int m = 0; m < w; ++m) {
          SparseVec<Qq> rel;
          for (const auto& [r, val] : Tv.column(v * w + m)) axpy(rel, val, SparseVec<Qq>{{off_nu + r, Qq(1)}});
          if (mu_present)
            for (const auto& [m2, val] : tm.column(m)) axpy(rel, Qq(-1) * val, SparseVec<Qq>{{off_mu + v * wm + m2, Qq(1)}});
          if (!rel.empty()) out.relations.insert(std::move(rel));
        }
    }
  }
  out.relation_rank = out.relations.rank();
  for (int t = 0; t < total; ++t)
    if (!out.relations.pivots().count(t)) out.quotient_cols.push_back(t);
  // descent and induced action
  for (const auto& row : out.relations.rows())
    for (int i = 0; i < N; ++i)
      if (!out.relations.reduce(E[i].apply(row)).empty() || !out.relations.reduce(Fm[i].apply(row)).empty())
        throw InvariantError("functor_apply: relation span is not stable under generator " + std::to_string(i));
  FinModule<Qq>& Fmod = out.module;
  Fmod.N = N;
  const int dq = static_cast<int>(out.quotient_cols.size());
  for (int col : out.quotient_cols) {
    Fmod.labels.push_back(labels[col]);
    Fmod.weights.push_back(weights[col]);
  }
  for (int i = 0; i < N; ++i) {
    Matrix<Qq> e(dq, dq), f(dq, dq);
    for (int t = 0; t < dq; ++t) {
      for (const auto& [r, v] : out.project(E[i].column(out.quotient_cols[t]))) e.set(r, t, v);
      for (const auto& [r, v] : out.project(Fm[i].column(out.quotient_cols[t]))) f.set(r, t, v);
    }
    Fmod.E.push_back(std::move(e));
    Fmod.Fm.push_back(std::move(f));
  }
  const auto qrep = check_defining_relations(Fmod);
  if (!qrep.ok()) throw InvariantError("functor_apply: quotient fails " + qrep.failures.front());
  return out;
}

/// F(f) for a degree-0 module map f: A -> B, as a dim F(B) x dim F(A) matrix.
inline Matrix<Qq> functor_map(const Matrix<Qq>& f, const FDModule& A, const FDModule& B, const FunctorOutput& FA,
                              const FunctorOutput& FB) {
  if (!is_module_hom(f, A, B, 0))
    throw std::invalid_argument("functor_map: not a module homomorphism");
  std::map<Seq, int> slotA, slotB;
  for (std::size_t s = 0; s < FA.slices.size(); ++s) slotA[FA.slices[s]] = static_cast<int>(s);
  for (std::size_t s = 0; s < FB.slices.size(); ++s) slotB[FB.slices[s]] = static_cast<int>(s);
  // total-space map: identity on V_nu, f on the M side
  auto lift = [&](int col) {
    int s = 0;
    while (s + 1 < static_cast<int>(FA.offsets.size()) && FA.offsets[s + 1] <= col) ++s;
    const Seq& nu = FA.slices[s];
    const auto ba = detail::block_indices(A, nu);
    const auto bb = detail::block_indices(B, nu);
    const int local = col - FA.offsets[s];
    const int wa = static_cast<int>(ba.size());
    const int v = local / wa, m = local % wa;
    SparseVec<Qq> out;
    if (!slotB.count(nu)) return out;
    const int wb = static_cast<int>(bb.size());
    for (const auto& [row, val] : f.column(ba[m])) {
      auto it = std::find(bb.begin(), bb.end(), row);
      if (it == bb.end()) throw InvariantError("functor_map: f leaves the idempotent block");
      out.emplace(FB.offsets[slotB[nu]] + v * wb + static_cast<int>(it - bb.begin()), val);
    }
    return out;
  };
  auto lift_vec = [&](const SparseVec<Qq>& t) {
    SparseVec<Qq> r;
    for (const auto& [col, v] : t) axpy(r, v, lift(col));
    return r;
  };
  for (const auto& row : FA.relations.rows())
    if (!FB.relations.reduce(lift_vec(row)).empty()) throw InvariantError("functor_map: relations not preserved");
  Matrix<Qq> out(FB.dim(), FA.dim());
  for (int t = 0; t < FA.dim(); ++t)
    for (const auto& [r, v] : FB.project(lift(FA.quotient_cols[t]))) out.set(r, t, v);
  return out;
}

struct ModuleComparison {
  bool isomorphic = false;
  Matrix<Qq> witness;
  std::string invariant;  // reason when not isomorphic
  int hom_dim = 0;
};

inline ModuleComparison compare_modules(const FinModule<Qq>& A, const FinModule<Qq>& B) {
  ModuleComparison out;
  if (A.N != B.N || weight_character(A) != weight_character(B)) {
    out.invariant = "weight characters differ";
    return out;
  }
  const auto H = hom_space(A, B);
  out.hom_dim = static_cast<int>(H.size());
  if (H.empty()) {
    out.invariant = "hom space is zero";
    return out;
  }
  const int tries = A.dim() * static_cast<int>(H.size()) + 1;
  for (int t = 1; t <= tries; ++t) {
    Matrix<Qq> phi(B.dim(), A.dim());
    Qq coef(1);
    for (const auto& h : H) {
      phi = phi + coef * h;
      coef = coef * Qq(t);
    }
    if (rank(phi) == A.dim() && is_homomorphism(phi, A, B)) {
      out.isomorphic = true;
      out.witness = std::move(phi);
      return out;
    }
  }
  out.invariant = "no invertible intertwiner (hom dimension " + std::to_string(H.size()) + ")";
  return out;
}

struct BimoduleReport {
  int n = 0, cap = 0;
  long checked = 0;
  std::vector<std::string> failures;
  std::string orientation = kZOrientation;
  bool ok() const { return failures.empty(); }
};

namespace detail {

// Elements of V_nu (x) k[[x]] / (degree > cap): (basis vector, exponent) -> coefficient.
using VSeries = std::map<std::pair<int, Exponent>, Qq>;

inline void vs_add(VSeries& acc, int v, const Exponent& e, const Qq& c, int cap) {
  int deg = 0;
  for (int t : e) deg += t;
  if (deg > cap || detail::zero(c)) return;
  auto key = std::pair{v, e};
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (detail::zero(it->second)) acc.erase(it);
  }
}

inline VSeries vs_left(const SWDContext& c, const Seq& nu, bool is_e, int i, const VSeries& u, int cap) {
  const SliceOperators ops = slice_operators(c, nu);
  VSeries r;
  if (i != 0) {
    const Matrix<Qq>& A = is_e ? ops.V.E[i] : ops.V.Fm[i];
    for (const auto& [key, val] : u)
      for (const auto& [row, a] : A.column(key.first)) vs_add(r, row, key.second, a * val, cap);
    return r;
  }
  for (std::size_t a = 0; a < nu.size(); ++a) {
    const Matrix<Qq>& A = is_e ? ops.E0[a] : ops.F0[a];
    const QMonomial X = c.X(nu[a]);
    for (const auto& [key, val] : u)
      for (const auto& [row, coef] : A.column(key.first)) {
        const Qq base = coef * val;
        if (is_e) {  // X(1 + x_a)
          vs_add(r, row, key.second, X.value() * base, cap);
          Exponent e = key.second;
          e[a] += 1;
          vs_add(r, row, e, X.value() * base, cap);
        } else {  // X^{-1} sum (-x_a)^t
          Exponent e = key.second;
          Qq s = X.inverse().value() * base;
          for (int t = 0; t <= cap; ++t) {
            vs_add(r, row, e, s, cap);
            e[a] += 1;
            s = Qq(-1) * s;
          }
        }
      }
  }
  return r;
}

inline VSeries vs_tau(const SWDContext& c, const Seq& nu, int a, const VSeries& u, int cap) {
  const std::vector<int> orders{cap + 1, cap + 1};
  const TauKernel K = tau_kernel(c, nu[a], nu[a + 1], orders);
  const SliceShape src = slice_shape(c, nu);
  VSeries r;
  for (const auto& [key, val] : u) {
    const auto& [v, beta] = key;
    Exponent sb = beta;
    std::swap(sb[a], sb[a + 1]);
    for (const auto& [tv, g] : apply_kernel(K, src, a, v))
      g->for_each([&](const Exponent& e, const Qq& coef) {
        if (detail::zero(coef)) return;
        Exponent f = sb;
        f[a] += e[0];
        f[a + 1] += e[1];
        vs_add(r, tv, f, coef * val, cap);
      });
    if (K.equal) {
      // v (s_a f - f) / (x_a - x_{a+1})
      const Poly dd = Poly::monomial(beta, Rat(1)).divided_difference(a, a + 1);
      for (const auto& [e, coef] : dd.terms()) vs_add(r, v, e, Qq(-coef) * val, cap);
    }
  }
  return r;
}

inline VSeries vs_truncate(const VSeries& u, int below) {
  VSeries r;
  for (const auto& [key, val] : u) {
    int deg = 0;
    for (int t : key.second) deg += t;
    if (deg < below) r.emplace(key, val);
  }
  return r;
}

}  // namespace detail

/// Commutation of every e_i, f_i with every tau_a on V^ e(nu), modulo degree >= cap.
inline BimoduleReport verify_bimodule(const SWDContext& c, int n, int cap) {
  BimoduleReport rep;
  rep.n = n;
  rep.cap = cap;
  for (const auto& nu : all_sequences(static_cast<int>(c.I.size()), n)) {
    const SliceShape sh = slice_shape(c, nu);
    const auto monos = monomials_up_to(n, cap);
    for (int a = 0; a + 1 < n; ++a) {
      const Seq mu = swap_places(nu, a);
      for (int v = 0; v < sh.total(); ++v)
        for (const auto& beta : monos) {
          detail::VSeries u;
          u.emplace(std::pair{v, beta}, Qq(1));
          const detail::VSeries tu = detail::vs_tau(c, nu, a, u, cap);
          for (int i = 0; i < c.N; ++i)
            for (int which = 0; which < 2; ++which) {
              const bool is_e = which == 0;
              auto lhs = detail::vs_truncate(detail::vs_tau(c, nu, a, detail::vs_left(c, nu, is_e, i, u, cap), cap), cap);
              auto rhs = detail::vs_truncate(detail::vs_left(c, mu, is_e, i, tu, cap), cap);
              ++rep.checked;
              if (lhs != rhs && rep.failures.size() < 20)
                rep.failures.push_back(std::string(is_e ? "e" : "f") + std::to_string(i) + " vs tau" + std::to_string(a + 1) +
                                       " on slice " + seq_string(nu) + " basis " + std::to_string(v));
            }
        }
    }
  }
  return rep;
}

struct ExactnessReport {
  std::string quiver_type;
  bool in_hypothesis = false;
  int dim_sub = 0, dim_mid = 0, dim_quo = 0;
  int rank_inj = 0, rank_surj = 0;
  bool composite_zero = false;
  bool ok() const {
    return composite_zero && rank_inj == dim_sub && rank_surj == dim_quo && dim_mid == dim_sub + dim_quo;
  }
};

inline ExactnessReport verify_exactness(const SWDContext& c, const SESWitness& w) {
  ExactnessReport r;
  const QuiverType t = classify(c.params);
  r.quiver_type = t.tag();
  r.in_hypothesis = t.ade;
  const FunctorOutput Fs = functor_apply(c, w.sub), Fm = functor_apply(c, w.mid), Fq = functor_apply(c, w.quo);
  const Matrix<Qq> Fi = functor_map(w.inj, w.sub, w.mid, Fs, Fm);
  const Matrix<Qq> Fp = functor_map(w.surj, w.mid, w.quo, Fm, Fq);
  r.dim_sub = Fs.dim();
  r.dim_mid = Fm.dim();
  r.dim_quo = Fq.dim();
  r.rank_inj = rank(Fi);
  r.rank_surj = rank(Fp);
  r.composite_zero = (Fp * Fi).is_zero();
  return r;
}

}  // namespace swd
