#pragma once

// Laurent polynomials in q (graded dimensions, quantum integers) and the
// signed q-monomials c * (-q)^m used as spectral anchors.

#include <map>
#include <stdexcept>
#include <string>

#include "swd/exact/ratfun.hpp"

namespace swd {

class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(int c) {  // NOLINT: scalar literal
    if (c != 0) terms_[0] = Rat(c);
  }
  static LaurentQ monomial(const Rat& c, int e) {
    LaurentQ r;
    if (!detail::zero(c)) r.terms_[e] = c;
    return r;
  }

  const std::map<int, Rat>& terms() const { return terms_; }
  Rat coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  void add_term(int e, const Rat& c) {
    Rat v = coeff(e) + c;
    if (detail::zero(v)) {
      terms_.erase(e);
    } else {
      terms_[e] = v;
    }
  }

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

  /// Drop all terms of degree > max_deg.
  LaurentQ truncated(int max_deg) const {
    LaurentQ r;
    for (const auto& [e, c] : terms_)
      if (e <= max_deg) r.terms_[e] = c;
    return r;
  }
  /// Multiply by q^s.
  LaurentQ shifted(int s) const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_[e + s] = c;
    return r;
  }

  Qq to_qq() const {
    Qq r;
    for (const auto& [e, c] : terms_) r += Qq(c) * q_pow(e);
    return r;
  }

  /// "q^2 + 1 + q^-2" style, highest degree first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
      detail::append_term(out, detail::term_text(c.get_str(), mono));
    }
    return out;
  }

 private:
  std::map<int, Rat> terms_;
};

inline std::string to_string(const LaurentQ& x) { return x.to_string(); }

/// [n]_s = (q^{sn} - q^{-sn}) / (q^s - q^{-s}).
inline LaurentQ quantum_integer(int n, int s = 1) {
  if (s <= 0) throw std::invalid_argument("quantum_integer: symmetrizer must be positive");
  if (n < 0) return LaurentQ(0) - quantum_integer(-n, s);
  LaurentQ r;
  for (int j = 0; j < n; ++j) r.add_term(s * (n - 1 - 2 * j), Rat(1));
  return r;
}

/// Quantum binomial [m choose r] (balanced, symmetric under q -> 1/q).
inline LaurentQ quantum_binomial(int m, int r) {
  if (r < 0 || r > m) return LaurentQ();
  if (r == 0 || r == m) return LaurentQ(1);
  // [m r] = q^r [m-1 r] + q^{-(m-r)} [m-1 r-1]
  return quantum_binomial(m - 1, r).shifted(r) + quantum_binomial(m - 1, r - 1).shifted(r - m);
}

/// c * (-q)^m with c a nonzero rational: the spectral anchors and denominator roots.
struct QMonomial {
  Rat c{1};
  int m{0};

  static QMonomial one() { return {}; }
  static QMonomial neg_q_pow(int m) { return {Rat(1), m}; }

  Qq value() const {
    Rat sign = (m % 2 == 0) ? Rat(1) : Rat(-1);
    return Qq(c * sign) * q_pow(m);
  }
  QMonomial inverse() const {
    if (is_zero(c)) throw PoleError("zero spectral anchor");
    return {Rat(1) / c, -m};
  }
  friend QMonomial operator*(const QMonomial& a, const QMonomial& b) { return {a.c * b.c, a.m + b.m}; }
  friend QMonomial operator/(const QMonomial& a, const QMonomial& b) { return a * b.inverse(); }
  friend bool operator==(const QMonomial& a, const QMonomial& b) { return a.c == b.c && a.m == b.m; }
  friend bool operator!=(const QMonomial& a, const QMonomial& b) { return !(a == b); }
  friend bool operator<(const QMonomial& a, const QMonomial& b) {
    return a.m != b.m ? a.m < b.m : a.c < b.c;
  }

  std::string to_string() const {
    std::string base = m == 0 ? "1" : (m == 1 ? "(-q)" : "(-q)^" + std::to_string(m));
    if (c == 1) return base;
    std::string cs = detail::compound(c) ? "(" + c.get_str() + ")" : c.get_str();
    return m == 0 ? cs : cs + "*" + base;
  }
};

}  // namespace swd
