#pragma once

// Arbitrary-precision rationals (GMP) and the handful of helpers the rest of
// the tower expects from a scalar type.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace swd {

using Rat = mpq_class;
using BigInt = mpz_class;

/// Thrown when an exact computation hits a genuine pole or a division by zero.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an internal invariant that must never fail is violated.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat inverse(const Rat& x) {
  if (is_zero(x)) throw PoleError("division by zero in Q");
  return Rat(1) / x;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// True when the printed form needs parentheses inside a product.
inline bool is_compound(const Rat& x) { return sgn(x) < 0 || x.get_den() != 1; }

// Dispatch helpers for templates whose members shadow the free functions.
namespace detail {
template <class T>
bool zero(const T& x) {
  return is_zero(x);
}
template <class T>
std::string str(const T& x) {
  return to_string(x);
}
template <class T>
bool compound(const T& x) {
  return is_compound(x);
}

// c*mono with c printed by str(); parentheses only around sums.
inline std::string term_text(const std::string& cs, const std::string& mono) {
  if (mono.empty()) return cs;
  if (cs == "1") return mono;
  if (cs == "-1") return "-" + mono;
  if (cs.find(' ') != std::string::npos) return "(" + cs + ")*" + mono;
  return cs + "*" + mono;
}
inline void append_term(std::string& out, const std::string& t) {
  if (out.empty()) {
    out = t;
  } else if (t[0] == '-') {
    out += " - " + t.substr(1);
  } else {
    out += " + " + t;
  }
}
}  // namespace detail

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace swd
