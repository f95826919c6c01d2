#pragma once

// Polynomials in nilpotent variables x_1..x_n with x_k^{N_k} = 0, optionally
// also truncated at a total degree. This is the finite quotient of the
// completed local ring k[[x_1..x_n]] that a finite-dimensional module sees.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "swd/exact/laurent.hpp"
#include "swd/exact/mpoly.hpp"
#include "swd/exact/ratfun.hpp"

namespace swd {

template <class F>
class TruncPoly {
 public:
  TruncPoly() = default;
  /// Zero series with the given per-variable nilpotency orders (each >= 1).
  /// total_cap < 0 means no total-degree truncation.
  explicit TruncPoly(std::vector<int> orders, int total_cap = -1)
      : orders_(std::move(orders)), total_cap_(total_cap) {
    std::size_t size = 1;
    for (int o : orders_) {
      if (o < 1) throw std::invalid_argument("TruncPoly: nilpotency orders must be >= 1");
      size *= static_cast<std::size_t>(o);
    }
    c_.assign(size, F(0));
  }
  static TruncPoly constant(std::vector<int> orders, const F& c, int total_cap = -1) {
    TruncPoly p(std::move(orders), total_cap);
    p.c_[0] = c;
    return p;
  }
  /// x_k (0-based k).
  static TruncPoly variable(std::vector<int> orders, int k, int total_cap = -1) {
    TruncPoly p(std::move(orders), total_cap);
    Exponent e(p.orders_.size(), 0);
    e[static_cast<std::size_t>(k)] = 1;
    if (p.admissible(e)) p.c_[p.index(e)] = F(1);
    return p;
  }

  int nvars() const { return static_cast<int>(orders_.size()); }
  const std::vector<int>& orders() const { return orders_; }
  int total_cap() const { return total_cap_; }
  std::size_t size() const { return c_.size(); }

  F coeff(const Exponent& e) const { return admissible(e) ? c_[index(e)] : F(0); }
  void set(const Exponent& e, F v) {
    if (admissible(e)) c_[index(e)] = std::move(v);
  }
  const F& constant_term() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& a : c_)
      if (!detail::zero(a)) return false;
    return true;
  }

  /// Visit every nonzero coefficient with its exponent.
  template <class Fn>
  void for_each(Fn&& fn) const {
    Exponent e(orders_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!detail::zero(c_[i])) fn(static_cast<const Exponent&>(e), c_[i]);
      increment(e);
    }
  }

  TruncPoly operator-() const {
    TruncPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) {
    a.check_compatible(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) {
    a.check_compatible(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    return a;
  }
  friend TruncPoly operator*(const F& s, TruncPoly a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    a.check_compatible(b);
    TruncPoly r(a.orders_, a.total_cap_);
    std::vector<std::pair<Exponent, const F*>> bt;
    b.for_each([&](const Exponent& e, const F& c) { bt.emplace_back(e, &c); });
    a.for_each([&](const Exponent& ea, const F& ca) {
      for (const auto& [eb, cb] : bt) {
        Exponent e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        if (!r.admissible(e)) continue;
        auto& slot = r.c_[r.index(e)];
        slot = slot + ca * *cb;
      }
    });
    return r;
  }
  TruncPoly& operator+=(const TruncPoly& o) { return *this = *this + o; }
  TruncPoly& operator*=(const TruncPoly& o) { return *this = *this * o; }
  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return a.orders_ == b.orders_ && a.total_cap_ == b.total_cap_ && a.c_ == b.c_;
  }

  /// Largest total degree that can be nonzero.
  int max_degree() const {
    int d = 0;
    for (int o : orders_) d += o - 1;
    return total_cap_ >= 0 ? std::min(d, total_cap_) : d;
  }

  /// Inverse via the finite geometric series; throws PoleError when the constant term vanishes.
  TruncPoly inverse() const {
    if (detail::zero(c_[0])) throw PoleError("TruncPoly::inverse: constant term vanishes");
    F c0inv = F(1) / c_[0];
    // this = c0 (1 + u) with u nilpotent; inverse = c0^{-1} sum (-u)^k
    TruncPoly u = c0inv * *this;
    u.c_[0] = F(0);
    TruncPoly neg_u = -u;
    TruncPoly term = constant(orders_, F(1), total_cap_);
    TruncPoly acc = term;
    for (int k = 1; k <= max_degree(); ++k) {
      term = term * neg_u;
      acc += term;
    }
    return c0inv * acc;
  }

  TruncPoly pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TruncPoly r = constant(orders_, F(1), total_cap_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Exchange variables a and b (requires equal orders).
  TruncPoly swapped(int a, int b) const {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    if (orders_[ua] != orders_[ub]) throw std::invalid_argument("TruncPoly::swapped: unequal orders");
    TruncPoly r(orders_, total_cap_);
    for_each([&](const Exponent& e, const F& c) {
      Exponent f = e;
      std::swap(f[ua], f[ub]);
      r.c_[r.index(f)] = c;
    });
    return r;
  }

  /// (f - f|_{x_a <-> x_b}) / (x_a - x_b) applied to the stored polynomial.
  /// Exact on the stored terms; terms of the true series beyond the truncation
  /// affect the result only in the top degree.
  TruncPoly divided_difference(int a, int b) const {
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    TruncPoly r(orders_, total_cap_);
    for_each([&](const Exponent& e, const F& c) {
      int i = e[ua], j = e[ub];
      if (i == j) return;
      int lo = std::min(i, j), d = i > j ? i - j : j - i;
      F s = i > j ? F(c) : F(-c);
      for (int t = 0; t < d; ++t) {
        Exponent f = e;
        f[ua] = lo + (d - 1 - t);
        f[ub] = lo + t;
        if (r.admissible(f)) {
          auto& slot = r.c_[r.index(f)];
          slot = slot + s;
        }
      }
    });
    return r;
  }

  /// Drop every term of total degree >= deg.
  TruncPoly drop_from_degree(int deg) const {
    TruncPoly r = *this;
    Exponent e(orders_.size(), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (std::accumulate(e.begin(), e.end(), 0) >= deg) r.c_[i] = F(0);
      increment(e);
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for_each([&](const Exponent& e, const F& c) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1) + (e[i] == 1 ? "" : "^" + std::to_string(e[i]));
      }
      detail::append_term(out, detail::term_text(detail::str(c), mono));
    });
    return out.empty() ? "0" : out;
  }

 private:
  bool admissible(const Exponent& e) const {
    int tot = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= orders_[i]) return false;
      tot += e[i];
    }
    return total_cap_ < 0 || tot <= total_cap_;
  }
  std::size_t index(const Exponent& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(e[i]);
    return idx;
  }
  // Mixed-radix successor consistent with index().
  void increment(Exponent& e) const {
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] < orders_[i]) return;
      e[i] = 0;
    }
  }
  void check_compatible(const TruncPoly& o) const {
    if (orders_ != o.orders_ || total_cap_ != o.total_cap_) {
      throw std::invalid_argument("TruncPoly: incompatible truncation orders");
    }
  }

  std::vector<int> orders_;
  int total_cap_ = -1;
  std::vector<F> c_;
};

template <class F>
bool is_zero(const TruncPoly<F>& p) {
  return p.is_zero();
}

namespace detail {

template <class T>
struct tower_depth : std::integral_constant<int, 0> {};
template <class F, int K>
struct tower_depth<RatFun<F, VarX<K>>> : std::integral_constant<int, K> {
  static_assert(tower_depth<F>::value == K - 1, "X variables must be nested X1 innermost");
};

template <class R>
TruncPoly<Qq> trunc_eval_rec(const R& f, const std::vector<QMonomial>& anchors, const std::vector<int>& orders) {
  if constexpr (std::is_same_v<R, Qq>) {
    return TruncPoly<Qq>::constant(orders, f);
  } else {
    constexpr int k = tower_depth<R>::value;  // this level's variable is X_k
    const auto uk = static_cast<std::size_t>(k - 1);
    // X_k = a_k (1 + x_k)
    TruncPoly<Qq> xk = TruncPoly<Qq>::variable(orders, k - 1);
    TruncPoly<Qq> Xk = anchors[uk].value() * (TruncPoly<Qq>::constant(orders, Qq(1)) + xk);
    auto horner = [&](const auto& poly) {
      TruncPoly<Qq> acc(orders);
      const auto& cs = poly.coeffs();
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * Xk + trunc_eval_rec(*it, anchors, orders);
      return acc;
    };
    TruncPoly<Qq> den = horner(f.den());
    if (is_zero(den.constant_term())) {
      throw PoleError("trunc_eval: denominator " + f.den().to_string(VarX<k>::name) +
                      " vanishes at the anchor " + VarX<k>::name + " = " + anchors[uk].to_string());
    }
    return horner(f.num()) * den.inverse();
  }
}

}  // namespace detail

/// Taylor expansion of f(X_1..X_n) at X_k = a_k (1 + x_k), truncated to
/// x_k^{N_k} = 0. f lives in Q(q)(X_1)...(X_n).
template <class R>
TruncPoly<Qq> trunc_eval(const R& f, const std::vector<QMonomial>& anchors, const std::vector<int>& orders) {
  constexpr int n = detail::tower_depth<R>::value;
  if (static_cast<int>(anchors.size()) != n || static_cast<int>(orders.size()) != n) {
    throw std::invalid_argument("trunc_eval: need one anchor and one order per variable");
  }
  return detail::trunc_eval_rec(f, anchors, orders);
}

}  // namespace swd
