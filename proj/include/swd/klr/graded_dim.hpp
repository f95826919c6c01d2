#pragma once

// Permutations with fixed reduced words, PBW-type spanning sets
// tau_w x^alpha e(nu), and graded dimensions of e(nu') R e(nu) as ranks in
// the polynomial representation.

#include <map>
#include <vector>

#include "swd/exact/laurent.hpp"
#include "swd/klr/polyrep.hpp"
#include "swd/linalg/echelon.hpp"

namespace swd {

struct Perm {
  std::vector<int> image;  // the word applied to (0, 1, ..., n-1)
  std::vector<int> word;   // lexicographically first reduced word
  int length() const { return static_cast<int>(word.size()); }
  Seq act(const Seq& nu) const {
    Seq r(nu.size());
    for (std::size_t p = 0; p < nu.size(); ++p) r[p] = nu[static_cast<std::size_t>(image[p])];
    return r;
  }
};

/// Arrangement produced by applying s_{w_l}, ..., s_{w_1} (rightmost first) to the identity.
inline std::vector<int> word_image(int n, const std::vector<int>& word) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) r[static_cast<std::size_t>(p)] = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) std::swap(r[static_cast<std::size_t>(*it)], r[static_cast<std::size_t>(*it) + 1]);
  return r;
}

/// All of S_n, each with its lexicographically first reduced word, by length.
inline std::vector<Perm> permutations(int n) {
  std::map<std::vector<int>, std::vector<int>> seen;
  std::vector<Perm> out;
  std::vector<std::vector<int>> layer{{}};
  seen.emplace(word_image(n, {}), std::vector<int>{});
  out.push_back({word_image(n, {}), {}});
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)  // layer is in lexicographic order
      for (int a = 0; a + 1 < n; ++a) {
        auto w2 = w;
        w2.push_back(a);
        auto img = word_image(n, w2);
        if (seen.count(img)) continue;
        seen.emplace(img, w2);
        out.push_back({img, w2});
        next.push_back(w2);
      }
    layer = std::move(next);
  }
  return out;
}

/// Degree of tau_w e(nu) along the fixed word.
inline int word_degree(const PolyRep& R, const std::vector<int>& word, Seq nu) {
  int d = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    d += R.tau_degree(*it, nu);
    nu = swap_places(nu, *it);
  }
  return d;
}

/// Staircase monomials x^alpha with alpha_p <= p: a basis of the polynomials over the symmetric ones.
inline std::vector<Exponent> staircase(int n) {
  std::vector<Exponent> out{Exponent(static_cast<std::size_t>(n), 0)};
  for (int p = 1; p < n; ++p) {
    std::vector<Exponent> next;
    for (const auto& e : out)
      for (int v = 0; v <= p; ++v) {
        auto f = e;
        f[static_cast<std::size_t>(p)] = v;
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

/// Coordinates of an operator e(nu') X e(nu) from its values on the staircase inputs.
class OperatorCoords {
 public:
  OperatorCoords(const PolyRep& R, Seq nu, Seq target) : R_(R), nu_(std::move(nu)), target_(std::move(target)), inputs_(staircase(R.n())) {}

  template <class Op>
  SparseVec<Rat> of(Op&& op) {
    SparseVec<Rat> v;
    for (std::size_t s = 0; s < inputs_.size(); ++s) {
      PolyElem out = op(R_.basis(nu_, inputs_[s]));
      auto it = out.find(target_);
      if (it == out.end()) continue;
      for (const auto& [e, c] : it->second.terms()) {
        auto key = std::pair{static_cast<int>(s), e};
        auto [pos, fresh] = index_.emplace(key, static_cast<int>(index_.size()));
        v.emplace(pos->second, c);
      }
    }
    return v;
  }

 private:
  const PolyRep& R_;
  Seq nu_, target_;
  std::vector<Exponent> inputs_;
  std::map<std::pair<int, Exponent>, int> index_;
};

/// Graded dimension of e(nu') R e(nu) in degrees <= D (negative degrees included).
inline LaurentQ graded_dim(const KLRAlgebraSpec& spec, const Seq& nu, const Seq& target, int D) {
  if (block_of(nu, spec.vertices()) != block_of(target, spec.vertices()))
    throw std::invalid_argument("graded_dim: " + seq_string(nu) + " and " + seq_string(target) + " lie in different blocks");
  const int n = spec.n;
  const PolyRep R(spec.params, n);
  OperatorCoords coords(R, nu, target);
  std::map<int, RowEchelon<Rat>> by_degree;
  for (const auto& w : permutations(n)) {
    if (w.act(nu) != target) continue;
    const int dw = word_degree(R, w.word, nu);
    if (dw > D) continue;
    for (const auto& alpha : monomials_up_to(n, (D - dw) / 2)) {
      int deg = dw;
      for (int v : alpha) deg += 2 * v;
      const Poly xa = Poly::monomial(alpha, Rat(1));
      by_degree[deg].insert(coords.of([&](const PolyElem& v) { return R.tau_word(w.word, R.times(xa, v)); }));
    }
  }
  LaurentQ out;
  for (auto& [deg, ech] : by_degree)
    if (ech.rank() > 0) out.add_term(deg, Rat(ech.rank()));
  return out;
}

}  // namespace swd
