#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace cosetvoa {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design of arithmetic code
  Rational(const BigInt& n) : value_(n) {}  // NOLINT
  Rational(const BigInt& n, const BigInt& d) {
    require(d != 0, "Rational: zero denominator");
    value_ = d < 0 ? boost::multiprecision::cpp_rational(BigInt(-n), BigInt(-d)) : boost::multiprecision::cpp_rational(n, d);
  }
  Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  /// Largest integer not exceeding the value.
  BigInt floor() const {
    BigInt n = numerator();
    BigInt d = denominator();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
  }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), "Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or "p" when the value is an integer.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(text));
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_{0};
};

/// Canonical representative of q + Z in [0, 1).
inline Rational mod1(const Rational& q) { return q - Rational(q.floor()); }

/// True iff q lies in the coset target + modulus*Z.
inline bool congruent(const Rational& q, const Rational& target, std::int64_t modulus) {
  Rational diff = (q - target) / Rational(modulus);
  return diff.is_integer();
}

}  // namespace cosetvoa
