#pragma once

// Dense univariate polynomials over an exact field F.
//
// F must provide F(int), the four field operations, operator==, and the free
// functions is_zero(F) and to_string(F).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "swd/exact/rational.hpp"

namespace swd {

template <class F>
class UPoly {
 public:
  using coeff_type = F;

  UPoly() = default;
  explicit UPoly(F c) {
    if (!detail::zero(c)) c_.push_back(std::move(c));
  }
  explicit UPoly(int c) : UPoly(F(c)) {}
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(F c, int deg) {
    if (detail::zero(c)) return {};
    std::vector<F> v(static_cast<std::size_t>(deg) + 1, F(0));
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(F(1), 1); }
  /// The linear polynomial x - root.
  static UPoly linear(const F& root) { return UPoly(std::vector<F>{-root, F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : F(0);
  }
  const F& lead() const { return c_.back(); }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in a ring T that F embeds into via `lift`.
  template <class T, class Lift>
  T eval(const T& x, Lift&& lift) const {
    T acc = lift(F(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift(*it);
    return acc;
  }

  UPoly monic() const {
    if (c_.empty() || lead() == F(1)) return *this;
    F inv = F(1) / lead();
    UPoly r = *this;
    for (auto& a : r.c_) a = a * inv;
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> v(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<int>(i));
    return UPoly(std::move(v));
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const F& s, const UPoly& a) {
    if (detail::zero(s)) return {};
    UPoly r = a;
    for (auto& c : r.c_) c = s * c;
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw PoleError("polynomial division by zero");
    if (degree() < d.degree()) return {UPoly{}, *this};
    std::vector<F> rem = c_;
    std::vector<F> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, F(0));
    const F inv = F(1) / d.lead();
    const int dd = d.degree();
    for (int k = degree(); k >= dd; --k) {
      const F& top = rem[static_cast<std::size_t>(k)];
      if (detail::zero(top)) continue;
      F f = top * inv;
      for (int j = 0; j <= dd; ++j) {
        auto idx = static_cast<std::size_t>(k - dd + j);
        rem[idx] = rem[idx] - f * d.c_[static_cast<std::size_t>(j)];
      }
      quo[static_cast<std::size_t>(k - dd)] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  /// Exact quotient; throws if the division leaves a remainder.
  UPoly exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw InvariantError("exact_div: nonzero remainder");
    return q;
  }

  std::string to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const F& a = c_[static_cast<std::size_t>(k)];
      if (detail::zero(a)) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      detail::append_term(out, detail::term_text(detail::str(a), mono));
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
bool is_zero(const UPoly<F>& p) {
  return p.is_zero();
}

/// Monic gcd (zero only when both inputs are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UPoly<F> lcm(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a.exact_div(gcd(a, b)) * b).monic();
}

/// Multiplicity of `root` as a zero of p (p must be nonzero).
template <class F>
int root_multiplicity(UPoly<F> p, const F& root) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
  const auto lin = UPoly<F>::linear(root);
  int k = 0;
  while (is_zero(p(root))) {
    p = p.exact_div(lin);
    ++k;
  }
  return k;
}

}  // namespace swd
