#pragma once

// Short exact sequences 0 -> M' -> M -> M'' -> 0 of graded KLR modules with
// explicit maps, and their certification by rank computations.

#include <stdexcept>
#include <string>
#include <vector>

#include "swd/klr/convolution.hpp"

namespace swd {

struct SESWitness {
  std::string family;
  FDModule sub, mid, quo;
  Matrix<Qq> inj, surj;
};

struct SESReport {
  bool inj_hom = false, surj_hom = false, composite_zero = false;
  int rank_inj = 0, rank_surj = 0;
  int dim_sub = 0, dim_mid = 0, dim_quo = 0;
  bool ok() const {
    return inj_hom && surj_hom && composite_zero && rank_inj == dim_sub && rank_surj == dim_quo &&
           dim_mid == dim_sub + dim_quo;
  }
};

inline SESReport verify_ses(const SESWitness& w) {
  SESReport r;
  r.inj_hom = is_module_hom(w.inj, w.sub, w.mid);
  r.surj_hom = is_module_hom(w.surj, w.mid, w.quo);
  r.composite_zero = (w.surj * w.inj).is_zero();
  r.rank_inj = rank(w.inj);
  r.rank_surj = rank(w.surj);
  r.dim_sub = w.sub.dim();
  r.dim_mid = w.mid.dim();
  r.dim_quo = w.quo.dim();
  return r;
}

/// 0 -> q^{d_ij + d_ji} L(ji) -> L(i) o L(j) -> L(ij) -> 0 for i, j joined by an edge.
inline SESWitness build_ses_adjacent(const KLRParams& p, int i, int j) {
  if (i == j || p.d[i][j] + p.d[j][i] == 0)
    throw std::invalid_argument("build_ses_adjacent: vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not joined by an edge");
  SESWitness w;
  w.family = "adjacent";
  w.mid = convolution(one_dim_module(p, {i}), one_dim_module(p, {j}));
  std::vector<int> lower;
  std::vector<SparseVec<Qq>> gens;
  for (int b = 0; b < w.mid.dim(); ++b)
    if (w.mid.idem[b] != Seq{i, j}) {
      lower.push_back(b);
      gens.push_back({{b, Qq(1)}});
    }
  if (static_cast<int>(submodule_generated(w.mid, gens).size()) != static_cast<int>(lower.size()))
    throw InvariantError("build_ses_adjacent: the e(ji) part is not a submodule");
  auto [S, inc] = submodule_on_basis(w.mid, lower);
  auto [Q, proj] = quotient_on_basis(w.mid, lower);
  w.sub = std::move(S);
  w.inj = std::move(inc);
  w.quo = std::move(Q);
  w.surj = std::move(proj);
  return w;
}

/// 0 -> A -> A (+) B -> B -> 0.
inline SESWitness build_ses_split(const FDModule& A, const FDModule& B) {
  SESWitness w;
  w.family = "split";
  w.sub = A;
  w.quo = B;
  w.mid = direct_sum(A, B);
  w.inj = Matrix<Qq>(w.mid.dim(), A.dim());
  w.surj = Matrix<Qq>(B.dim(), w.mid.dim());
  for (int b = 0; b < A.dim(); ++b) w.inj.set(b, b, Qq(1));
  for (int b = 0; b < B.dim(); ++b) w.surj.set(b, A.dim() + b, Qq(1));
  return w;
}

}  // namespace swd
