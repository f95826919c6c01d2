#pragma once

// The KLR algebra R^I(n) through its faithful polynomial representation on
// the direct sum of Q[x_1..x_n] e(nu) over nu in I^n.
//
// Left action: e(nu) projects, x_k multiplies, and tau_a sends f e(nu) to
//   ((s_a f) - f) / (x_a - x_{a+1}) e(nu)            if nu_a = nu_{a+1},
//   P_{nu_a,nu_{a+1}}(x_{a+1}, x_a) (s_a f) e(s_a nu) otherwise.
// Variables and positions are 0-based here.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/mpoly.hpp"
#include "swd/quiver/quiver.hpp"

namespace swd {

using Seq = std::vector<int>;
using Poly = MPoly<Rat>;
using PolyElem = std::map<Seq, Poly>;

inline std::string seq_string(const Seq& nu) {
  std::string s;
  for (int v : nu) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "(" + s + ")";
}

inline Seq swap_places(Seq nu, int a) {
  std::swap(nu[static_cast<std::size_t>(a)], nu[static_cast<std::size_t>(a) + 1]);
  return nu;
}

/// All sequences in {0..m-1}^n in lexicographic order.
inline std::vector<Seq> all_sequences(int m, int n) {
  std::vector<Seq> out;
  Seq cur(static_cast<std::size_t>(n), 0);
  if (m == 0) return n == 0 ? std::vector<Seq>{cur} : out;
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - 1) cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

/// beta as multiplicities of simple roots.
inline std::vector<int> block_of(const Seq& nu, int m) {
  std::vector<int> beta(static_cast<std::size_t>(m), 0);
  for (int v : nu) ++beta[static_cast<std::size_t>(v)];
  return beta;
}

struct KLRAlgebraSpec {
  KLRParams params;
  int n = 0;

  int vertices() const { return params.size(); }
  std::vector<Seq> sequences() const { return all_sequences(vertices(), n); }
  /// I^beta: the sequences whose simple roots sum to beta.
  std::vector<Seq> block(const std::vector<int>& beta) const {
    std::vector<Seq> out;
    for (auto& nu : sequences())
      if (block_of(nu, vertices()) == beta) out.push_back(nu);
    return out;
  }
};

/// Monomials of total degree <= D in n variables (graded, then lexicographic).
inline std::vector<Exponent> monomials_up_to(int n, int D) {
  std::vector<Exponent> out;
  for (int deg = 0; deg <= D; ++deg) {
    Exponent e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        e[static_cast<std::size_t>(i)] = left;
        out.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[static_cast<std::size_t>(i)] = v;
        rec(i + 1, left - v);
      }
    };
    if (n == 0) {
      if (deg == 0) out.push_back(e);
    } else {
      rec(0, deg);
    }
  }
  return out;
}

inline void add_into(PolyElem& acc, const Seq& nu, const Poly& f) {
  if (f.is_zero()) return;
  auto it = acc.find(nu);
  if (it == acc.end()) {
    acc.emplace(nu, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) acc.erase(it);
}

inline PolyElem operator+(PolyElem a, const PolyElem& b) {
  for (const auto& [nu, f] : b) add_into(a, nu, f);
  return a;
}
inline PolyElem operator-(PolyElem a, const PolyElem& b) {
  for (const auto& [nu, f] : b) add_into(a, nu, -f);
  return a;
}

class PolyRep {
 public:
  PolyRep(KLRParams params, int n) : p_(std::move(params)), n_(n) {}

  const KLRParams& params() const { return p_; }
  int n() const { return n_; }

  PolyElem basis(const Seq& nu, const Exponent& e) const { return {{nu, Poly::monomial(e, Rat(1))}}; }

  PolyElem idem(const Seq& nu, const PolyElem& v) const {
    auto it = v.find(nu);
    return it == v.end() ? PolyElem{} : PolyElem{*it};
  }

  PolyElem x(int k, const PolyElem& v) const { return times(Poly::variable(n_, k), v); }

  PolyElem times(const Poly& g, const PolyElem& v) const {
    PolyElem r;
    for (const auto& [nu, f] : v) add_into(r, nu, g * f);
    return r;
  }

  PolyElem tau(int a, const PolyElem& v) const {
    PolyElem r;
    for (const auto& [nu, f] : v) {
      auto [mu, g] = tau_component(a, nu, f);
      add_into(r, mu, g);
    }
    return r;
  }

  /// tau_a on a single component f e(nu).
  std::pair<Seq, Poly> tau_component(int a, const Seq& nu, const Poly& f) const {
    const int i = nu[static_cast<std::size_t>(a)], j = nu[static_cast<std::size_t>(a) + 1];
    if (i == j) return {nu, -f.divided_difference(a, a + 1)};
    return {swap_places(nu, a), p_.P(i, j, n_, a + 1, a) * f.swapped(a, a + 1)};
  }

  /// Apply tau_{w_1} ... tau_{w_l} (rightmost letter first).
  PolyElem tau_word(const std::vector<int>& word, PolyElem v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = tau(*it, v);
    return v;
  }

  /// Degree shift of the component e(nu): sum over a < b of d_{nu_a nu_b}.
  int component_shift(const Seq& nu) const {
    int s = 0;
    for (std::size_t a = 0; a < nu.size(); ++a)
      for (std::size_t b = a + 1; b < nu.size(); ++b) s += p_.d[nu[a]][nu[b]];
    return s;
  }
  int degree(const Seq& nu, const Exponent& e) const {
    int s = 0;
    for (int v : e) s += v;
    return 2 * s + component_shift(nu);
  }
  /// deg tau_a e(nu) = -(alpha_{nu_a} | alpha_{nu_{a+1}}).
  int tau_degree(int a, const Seq& nu) const {
    return -p_.cartan(nu[static_cast<std::size_t>(a)], nu[static_cast<std::size_t>(a) + 1]);
  }
  /// (true, degree) when all terms share one degree; (true, 0) for zero.
  std::pair<bool, int> homogeneous_degree(const PolyElem& v) const {
    bool first = true;
    int deg = 0;
    for (const auto& [nu, f] : v)
      for (const auto& [e, c] : f.terms()) {
        int d = degree(nu, e);
        if (first) {
          deg = d;
          first = false;
        } else if (d != deg) {
          return {false, 0};
        }
      }
    return {true, deg};
  }

 private:
  KLRParams p_;
  int n_;
};

enum class GenKind { idem, x, tau };

struct Generator {
  GenKind kind = GenKind::x;
  int index = 0;  // k for x_k, a for tau_a
  Seq nu;         // for e(nu)

  std::string label() const {
    switch (kind) {
      case GenKind::idem:
        return "e" + seq_string(nu);
      case GenKind::x:
        return "x" + std::to_string(index + 1);
      default:
        return "tau" + std::to_string(index + 1);
    }
  }
};

/// A generator tabulated on the monomial basis of degree <= D in every component.
struct PolyRepOperator {
  int n = 0;
  int cap = 0;
  Generator gen;
  std::map<std::pair<Seq, Exponent>, PolyElem> action;
  mutable bool truncated = false;

  /// Apply to v; input terms above the cap are dropped and flagged.
  PolyElem apply(const PolyElem& v) const {
    PolyElem r;
    for (const auto& [nu, f] : v)
      for (const auto& [e, c] : f.terms()) {
        auto it = action.find({nu, e});
        if (it == action.end()) {
          truncated = true;
          continue;
        }
        for (const auto& [mu, g] : it->second) add_into(r, mu, c * g);
      }
    return r;
  }
};

inline PolyElem apply_generator(const PolyRep& rep, const Generator& g, const PolyElem& v) {
  switch (g.kind) {
    case GenKind::idem:
      return rep.idem(g.nu, v);
    case GenKind::x:
      return rep.x(g.index, v);
    default:
      return rep.tau(g.index, v);
  }
}

inline PolyRepOperator polyrep_generator(const KLRAlgebraSpec& spec, const Generator& g, int D) {
  if (D < 0) throw std::invalid_argument("polyrep_generator: negative degree cap");
  PolyRep rep(spec.params, spec.n);
  PolyRepOperator op{spec.n, D, g, {}, false};
  for (const auto& nu : spec.sequences())
    for (const auto& e : monomials_up_to(spec.n, D)) op.action.emplace(std::pair{nu, e}, apply_generator(rep, g, rep.basis(nu, e)));
  return op;
}

}  // namespace swd
