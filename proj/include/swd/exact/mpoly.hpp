#pragma once

// Sparse multivariate polynomials in a fixed number of variables.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/rational.hpp"

namespace swd {

using Exponent = std::vector<int>;

template <class F>
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : n_(nvars) {}
  MPoly(int nvars, const F& c) : n_(nvars) {
    if (!detail::zero(c)) t_[Exponent(static_cast<std::size_t>(nvars), 0)] = c;
  }

  static MPoly variable(int nvars, int k) {
    MPoly p(nvars);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k)] = 1;
    p.t_[e] = F(1);
    return p;
  }
  static MPoly monomial(Exponent e, const F& c) {
    MPoly p(static_cast<int>(e.size()));
    if (!detail::zero(c)) p.t_[std::move(e)] = c;
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Exponent, F>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Exponent& e, const F& c) {
    if (detail::zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (detail::zero(it->second)) t_.erase(it);
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) {
    a.adopt(b);
    for (const auto& [e, c] : b.t_) a.add_term(e, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    a.adopt(b);
    for (const auto& [e, c] : b.t_) a.add_term(e, -c);
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(std::max(a.n_, b.n_));
    for (const auto& [e1, c1] : a.t_) {
      for (const auto& [e2, c2] : b.t_) {
        Exponent e = e1;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }
  friend MPoly operator*(const F& s, const MPoly& a) {
    MPoly r(a.n_);
    if (detail::zero(s)) return r;
    for (const auto& [e, c] : a.t_) r.t_.emplace(e, s * c);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int k) const {
    MPoly r(n_, F(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Exchange variables a and b.
  MPoly swapped(int a, int b) const {
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      std::swap(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
      r.t_.emplace(std::move(f), c);
    }
    return r;
  }

  /// Substitute variable k by variable j (other variables untouched).
  MPoly renamed(int k, int j) const {
    MPoly r(n_);
    for (const auto& [e, c] : t_) {
      Exponent f = e;
      f[static_cast<std::size_t>(j)] += f[static_cast<std::size_t>(k)];
      f[static_cast<std::size_t>(k)] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  /// (f - f|_{x_a <-> x_b}) / (x_a - x_b), exact for every polynomial.
  MPoly divided_difference(int a, int b) const {
    // For each monomial x_a^i x_b^j m: (x_a^i x_b^j - x_a^j x_b^i)/(x_a - x_b).
    MPoly r(n_);
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    for (const auto& [e, c] : t_) {
      int i = e[ua], j = e[ub];
      if (i == j) continue;
      // x_a^i x_b^j - x_a^j x_b^i = sign * (x_a x_b)^lo (x_a^d - x_b^d), d = |i-j|
      int lo = std::min(i, j), d = std::abs(i - j);
      F s = i > j ? F(c) : F(-c);
      for (int t = 0; t < d; ++t) {
        Exponent f = e;
        f[ua] = lo + (d - 1 - t);
        f[ub] = lo + t;
        r.add_term(f, s);
      }
    }
    return r;
  }

  /// Exact quotient by (x_a - x_b); throws if not divisible.
  MPoly divide_by_difference(int a, int b) const { return split_divide(a, b); }

  F eval(const std::vector<F>& point) const {
    F acc(0);
    for (const auto& [e, c] : t_) {
      F m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * point[i];
      acc = acc + m;
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i] + (e[i] == 1 ? "" : "^" + std::to_string(e[i]));
      }
      detail::append_term(out, detail::term_text(detail::str(c), mono));
    }
    return out;
  }

 private:
  void adopt(const MPoly& o) {
    if (n_ == 0) n_ = o.n_;
  }
  // Division by (x_a - x_b) by repeated leading-term elimination in x_a.
  MPoly split_divide(int a, int b) const {
    MPoly rem = *this, quo(n_);
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    while (!rem.is_zero()) {
      // pick a term with positive x_a exponent, maximal in x_a
      auto best = rem.t_.end();
      for (auto it = rem.t_.begin(); it != rem.t_.end(); ++it)
        if (it->first[ua] > 0 && (best == rem.t_.end() || it->first[ua] > best->first[ua])) best = it;
      if (best == rem.t_.end()) throw InvariantError("divide_by_difference: not divisible");
      Exponent e = best->first;
      F c = best->second;
      e[ua] -= 1;
      quo.add_term(e, c);
      // rem -= c * x^e * (x_a - x_b)
      Exponent ea = e, eb = e;
      ea[ua] += 1;
      eb[ub] += 1;
      rem.add_term(ea, -c);
      rem.add_term(eb, c);
    }
    return quo;
  }

  int n_ = 0;
  std::map<Exponent, F> t_;
};

}  // namespace swd
