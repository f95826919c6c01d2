#pragma once

// Recursive-descent parser for scalar expressions such as
//   "(q^2 - 1)/(q*z - q^-1)", "-3/4*q", "(-q)^3"
// Integers, named variables, + - * / ^ (integer exponent, possibly negative)
// and parentheses. The target field T is any tower level; variables are
// supplied as a name -> value table.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "swd/exact/ratfun.hpp"

namespace swd {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
class ExprParser {
 public:
  ExprParser(std::string text, std::map<std::string, T> vars) : s_(std::move(text)), vars_(std::move(vars)) {}

  T parse() {
    pos_ = 0;
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  T expr() {
    skip();
    T v;
    if (peek('-')) {
      ++pos_;
      v = -term();
    } else {
      if (peek('+')) ++pos_;
      v = term();
    }
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }
  T term() {
    T v = unary();
    for (;;) {
      skip();
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        ++pos_;
        T d = unary();
        if (is_zero(d)) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  T unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }
  T power() {
    T b = atom();
    skip();
    if (!peek('^')) return b;
    ++pos_;
    skip();
    int sign = 1;
    if (peek('-')) {
      sign = -1;
      ++pos_;
    } else if (peek('(')) {
      // allow q^(-2)
      ++pos_;
      skip();
      if (peek('-')) {
        sign = -1;
        ++pos_;
      }
      int e = integer();
      skip();
      expect(')');
      return raise(b, sign * e);
    }
    return raise(b, sign * integer());
  }
  T atom() {
    skip();
    if (peek('(')) {
      ++pos_;
      T v = expr();
      skip();
      expect(')');
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return T(embed<T>(Rat(digits())));
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(b, pos_ - b);
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return it->second;
    }
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input");
  }

  T raise(const T& b, int e) {
    if (e < 0 && is_zero(b)) fail("zero to a negative power");
    if constexpr (is_ratfun<T>::value) {
      return b.pow(e);
    } else {
      T r(1);
      for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * b;
      return e < 0 ? T(1) / r : r;
    }
  }
  int integer() {
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    return std::stoi(d);
  }
  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected an integer");
    return s_.substr(b, pos_ - b);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" + s_ + "\"");
  }

  std::string s_;
  std::map<std::string, T> vars_;
  std::size_t pos_ = 0;
};

/// Parse an element of Q(q).
inline Qq parse_qq(const std::string& text) { return ExprParser<Qq>(text, {{"q", q_var()}}).parse(); }

/// Parse an element of Q(q)(z).
inline Qqz parse_qqz(const std::string& text) {
  return ExprParser<Qqz>(text, {{"q", embed<Qqz>(q_var())}, {"z", Qqz::var()}}).parse();
}

}  // namespace swd
