#pragma once

// Convolution M1 o M2 = R(n1+n2) (x)_{R(n1) (x) R(n2)} (M1 (x) M2) on the
// basis tau_w (x) m (x) m' with w a minimal-length left coset
// representative. Products g tau_w e(nu) are rewritten as
// sum_w tau_w h_w with h_w in R(n1) (x) R(n2) by solving for coordinates in
// the PBW basis tau_w tau_v x^alpha e(nu) inside the polynomial representation.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "swd/klr/graded_dim.hpp"
#include "swd/klr/module.hpp"

namespace swd {

/// Minimal-length left coset representatives of S_{n1} x S_{n2} in S_n.
inline std::vector<Perm> shuffles(int n1, int n2) {
  std::vector<Perm> out;
  for (const auto& w : permutations(n1 + n2)) {
    bool ok = true;
    int last1 = -1, last2 = n1 - 1;
    for (int src : w.image) {
      if (src < n1) {
        ok = ok && src > last1;
        last1 = src;
      } else {
        ok = ok && src > last2;
        last2 = src;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

/// Elements of S_{n1} x S_{n2} (words avoid the letter n1 - 1).
inline std::vector<Perm> parabolic(int n1, int n2) {
  std::vector<Perm> out;
  for (const auto& v : permutations(n1 + n2))
    if (std::find(v.word.begin(), v.word.end(), n1 - 1) == v.word.end()) out.push_back(v);
  return out;
}

struct StraightenTerm {
  int coset = 0;            // index into shuffles
  std::vector<int> vword;   // word of v in S_{n1} x S_{n2}
  Exponent alpha;
  Rat coeff;
};

class Straightener {
 public:
  Straightener(const KLRParams& p, int n1, int n2)
      : R_(p, n1 + n2), n1_(n1), n2_(n2), cosets_(shuffles(n1, n2)), para_(parabolic(n1, n2)) {}

  const std::vector<Perm>& cosets() const { return cosets_; }
  const PolyRep& rep() const { return R_; }

  /// g tau_w e(nu) in normal form, with g = x_k (is_tau false) or tau_k.
  const std::vector<StraightenTerm>& expand(bool is_tau, int k, int w, const Seq& nu) {
    auto key = std::tuple{is_tau, k, w, nu};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Perm& pw = cosets_[w];
    const Seq mid = pw.act(nu);
    const Seq target = is_tau ? swap_places(mid, k) : mid;
    const int deg = word_degree(R_, pw.word, nu) + (is_tau ? R_.tau_degree(k, mid) : 2);
    OperatorCoords coords(R_, nu, target);
    auto lhs = [&](const PolyElem& v) {
      PolyElem u = R_.tau_word(pw.word, v);
      return is_tau ? R_.tau(k, u) : R_.x(k, u);
    };
    SparseVec<Rat> goal = coords.of(lhs);
    RowEchelon<Rat> ech(true);
    std::vector<StraightenTerm> cand;
    for (int c = 0; c < static_cast<int>(cosets_.size()); ++c)
      for (const auto& v : para_) {
        std::vector<int> word = cosets_[c].word;
        word.insert(word.end(), v.word.begin(), v.word.end());
        if (Perm{word_image(n(), word), word}.act(nu) != target) continue;
        const int dw = word_degree(R_, word, nu);
        if (dw > deg || (deg - dw) % 2 != 0) continue;
        for (const auto& alpha : monomials_up_to(n(), (deg - dw) / 2)) {
          int total = 0;
          for (int a : alpha) total += a;
          if (dw + 2 * total != deg) continue;
          const Poly xa = Poly::monomial(alpha, Rat(1));
          ech.insert(coords.of([&](const PolyElem& u) { return R_.tau_word(word, R_.times(xa, u)); }));
          cand.push_back({c, v.word, alpha, Rat(0)});
        }
      }
    auto combo = ech.express(goal);
    if (!combo) throw InvariantError("straightening: element outside the PBW span at " + seq_string(nu));
    std::vector<StraightenTerm> out;
    for (const auto& [t, c] : *combo) {
      StraightenTerm term = cand[static_cast<std::size_t>(t)];
      term.coeff = c;
      out.push_back(std::move(term));
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  int n() const { return n1_ + n2_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }

 private:
  PolyRep R_;
  int n1_, n2_;
  std::vector<Perm> cosets_, para_;
  std::map<std::tuple<bool, int, int, Seq>, std::vector<StraightenTerm>> memo_;
};

namespace detail {
/// tau_v x^alpha applied to basis vector b of a module (letters shifted by `offset`).
inline SparseVec<Qq> act_local(const FDModule& M, const std::vector<int>& vword, const Exponent& alpha, int offset,
                               int b) {
  SparseVec<Qq> v{{b, Qq(1)}};
  for (int k = 0; k < M.n; ++k)
    for (int t = 0; t < alpha[static_cast<std::size_t>(offset + k)]; ++t) v = M.X[k].apply(v);
  for (auto it = vword.rbegin(); it != vword.rend(); ++it) v = M.T[*it - offset].apply(v);
  return v;
}
}  // namespace detail

inline FDModule convolution(const FDModule& M1, const FDModule& M2) {
  if (M1.params.d != M2.params.d) throw std::invalid_argument("convolution: modules over different quivers");
  const int n1 = M1.n, n2 = M2.n, n = n1 + n2;
  Straightener S(M1.params, n1, n2);
  const auto& cosets = S.cosets();
  const int d1 = M1.dim(), d2 = M2.dim();
  const int nc = static_cast<int>(cosets.size());
  auto index = [&](int w, int i, int j) { return (w * d1 + i) * d2 + j; };
  FDModule M = empty_module(M1.params, n, nc * d1 * d2);
  for (int w = 0; w < nc; ++w)
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j) {
        Seq nu = M1.idem[i];
        nu.insert(nu.end(), M2.idem[j].begin(), M2.idem[j].end());
        M.idem.push_back(cosets[w].act(nu));
        M.degree.push_back(M1.degree[i] + M2.degree[j] + word_degree(S.rep(), cosets[w].word, nu));
        std::string wl;
        for (int a : cosets[w].word) wl += std::to_string(a + 1);
        M.labels.push_back("t[" + wl + "]" + (i < static_cast<int>(M1.labels.size()) ? M1.labels[i] : std::to_string(i)) +
                           "*" + (j < static_cast<int>(M2.labels.size()) ? M2.labels[j] : std::to_string(j)));
      }
  auto fill = [&](Matrix<Qq>& out, bool is_tau, int k) {
    for (int w = 0; w < nc; ++w)
      for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) {
          Seq nu = M1.idem[i];
          nu.insert(nu.end(), M2.idem[j].begin(), M2.idem[j].end());
          for (const auto& t : S.expand(is_tau, k, w, nu)) {
            std::vector<int> v1, v2;
            for (int a : t.vword) (a < n1 - 1 ? v1 : v2).push_back(a);
            const SparseVec<Qq> a1 = detail::act_local(M1, v1, t.alpha, 0, i);
            if (a1.empty()) continue;
            const SparseVec<Qq> a2 = detail::act_local(M2, v2, t.alpha, n1, j);
            for (const auto& [i2, c1] : a1)
              for (const auto& [j2, c2] : a2) out.add(index(t.coset, i2, j2), index(w, i, j), Qq(t.coeff) * c1 * c2);
          }
        }
  };
  for (int k = 0; k < n; ++k) fill(M.X[k], false, k);
  for (int k = 0; k + 1 < n; ++k) fill(M.T[k], true, k);
  auto rep = check_klr_module(M);
  if (!rep.ok()) throw InvariantError("convolution: result fails " + rep.failures.front());
  return M;
}

}  // namespace swd
