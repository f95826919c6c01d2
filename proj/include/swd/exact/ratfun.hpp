#pragma once

// Rational functions built as a tower of fraction fields:
//   Qq   = Q(q)
//   Qqz  = Q(q)(z)
//   Qqzw = Q(q)(z)(w)
// Each level is the fraction field of univariate polynomials over the level
// below, kept in canonical form: coprime numerator/denominator, monic
// denominator. Equal values therefore have identical representations.

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "swd/exact/rational.hpp"
#include "swd/exact/upoly.hpp"

namespace swd {

struct VarQ {
  static constexpr const char* name = "q";
};
struct VarZ {
  static constexpr const char* name = "z";
};
struct VarW {
  static constexpr const char* name = "w";
};
inline constexpr const char* kXNames[] = {"X0", "X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
/// Spectral variables X_1..X_8 for multivariate expansions.
template <int K>
struct VarX {
  static_assert(K >= 1 && K <= 8);
  static constexpr int index = K;
  static constexpr const char* name = kXNames[K];
};

template <class F, class Var>
class RatFun {
 public:
  using coeff_type = F;
  using var_type = Var;
  using poly_type = UPoly<F>;

  RatFun() : den_(F(1)) {}
  RatFun(int c) : num_(F(c)), den_(F(1)) {}  // NOLINT: implicit like a scalar literal
  RatFun(const F& c) : num_(c), den_(F(1)) {}  // NOLINT: coefficient embedding
  RatFun(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
    normalize();
  }
  explicit RatFun(poly_type p) : num_(std::move(p)), den_(F(1)) {}

  /// The variable of this level.
  static RatFun var() { return RatFun(poly_type::x()); }

  static std::string var_name() { return Var::name; }
  /// Variables of the whole tower, innermost first.
  static std::vector<std::string> variables() {
    std::vector<std::string> v;
    if constexpr (!std::is_same_v<F, Rat>) v = F::variables();
    v.emplace_back(Var::name);
    return v;
  }

  const poly_type& num() const { return num_; }
  const poly_type& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Constant term as an element of the coefficient field (requires is_constant()).
  F constant_value() const { return num_.coeff(0); }

  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return RatFun(a.num_ + b.num_, Raw{});
      return RatFun(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return RatFun(a.num_ * b.den_ + b.num_, b.den_, Raw{});
    if (b.den_.is_one()) return RatFun(a.num_ + b.num_ * a.den_, a.den_, Raw{});
    // Henrici: with g = gcd(b1, b2), only the result numerator and g can share factors.
    poly_type g = gcd(a.den_, b.den_);
    poly_type ad = a.den_.exact_div(g);
    poly_type bd = b.den_.exact_div(g);
    poly_type n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return RatFun();
    poly_type g2 = gcd(n, g);
    if (!g2.is_one()) {
      n = n.exact_div(g2);
      g = g.exact_div(g2);
    }
    return RatFun(std::move(n), (ad * bd * g), Monic{});
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_, Raw{});
    poly_type an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    poly_type g1 = gcd(an, bd);
    if (!g1.is_one()) {
      an = an.exact_div(g1);
      bd = bd.exact_div(g1);
    }
    poly_type g2 = gcd(bn, ad);
    if (!g2.is_one()) {
      bn = bn.exact_div(g2);
      ad = ad.exact_div(g2);
    }
    return RatFun(an * bn, ad * bd, Monic{});
  }

  RatFun inverse() const {
    if (is_zero()) throw PoleError(std::string("division by zero in Q(") + Var::name + ")");
    return RatFun(den_, num_, Monic{});
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Value at var = point; throws PoleError if the denominator vanishes there.
  F operator()(const F& point) const {
    F d = den_(point);
    if (detail::zero(d)) {
      throw PoleError(std::string("pole at ") + Var::name + " = " + detail::str(point));
    }
    return num_(point) / d;
  }

  /// Substitute var -> x where x lives in a field T containing F via `lift`.
  template <class T, class Lift>
  T eval(const T& x, Lift&& lift) const {
    T d = den_.eval(x, lift);
    if (detail::zero(d)) throw PoleError(std::string("pole in substitution for ") + Var::name);
    return num_.eval(x, lift) / d;
  }

  RatFun pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    std::string n = num_.to_string(Var::name);
    if (den_.is_one()) return n;
    std::string d = den_.to_string(Var::name);
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (d.find_first_of(" */") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  struct Raw {};
  struct Monic {};
  // Already coprime, denominator one.
  RatFun(poly_type num, Raw) : num_(std::move(num)), den_(F(1)) {}
  // Already coprime; only the denominator may need to be made monic.
  RatFun(poly_type num, poly_type den, Raw) : num_(std::move(num)), den_(std::move(den)) {
    make_monic();
  }
  RatFun(poly_type num, poly_type den, Monic) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
      den_ = poly_type(F(1));
      return;
    }
    make_monic();
  }

  void make_monic() {
    if (den_.lead() != F(1)) {
      F inv = F(1) / den_.lead();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = poly_type(F(1));
      return;
    }
    if (!den_.is_constant()) {
      poly_type g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
      }
    }
    make_monic();
  }

  poly_type num_;
  poly_type den_;
};

template <class F, class V>
bool is_zero(const RatFun<F, V>& x) {
  return x.is_zero();
}
template <class F, class V>
std::string to_string(const RatFun<F, V>& x) {
  return x.to_string();
}
template <class F, class V>
bool is_compound(const RatFun<F, V>& x) {
  if (!x.is_constant()) return true;
  return is_compound(x.constant_value());
}
template <class F, class V>
RatFun<F, V> inverse(const RatFun<F, V>& x) {
  return x.inverse();
}

using Qq = RatFun<Rat, VarQ>;
using Qqz = RatFun<Qq, VarZ>;
using Qqzw = RatFun<Qqz, VarW>;

template <class T>
struct is_ratfun : std::false_type {};
template <class F, class V>
struct is_ratfun<RatFun<F, V>> : std::true_type {};

/// Embed a value of a lower level of the tower into a higher one.
template <class Target, class Source>
Target embed(const Source& x) {
  if constexpr (std::is_same_v<Target, Source>) {
    return x;
  } else {
    static_assert(is_ratfun<Target>::value, "embed: target must be a tower level above the source");
    return Target(embed<typename Target::coeff_type>(x));
  }
}

inline Qq q_var() { return Qq::var(); }

/// q^e for any integer e, in any tower level.
template <class F = Qq>
F q_pow(int e) {
  return embed<F>(Qq::var().pow(e));
}

/// Order of f at var = point: positive for a pole, negative for a zero
/// (a zero of order m is reported as -m), 0 when finite and nonzero.
template <class F, class V>
int pole_order(const RatFun<F, V>& f, const F& point) {
  if (f.is_zero()) throw std::domain_error("pole_order of the zero function");
  return root_multiplicity(f.den(), point) - root_multiplicity(f.num(), point);
}

}  // namespace swd
