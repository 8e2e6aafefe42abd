#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qginv/errors.hpp"

namespace qginv {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Accepts "p" or "p/q" with optional sign; returns nothing on malformed text.
  static std::optional<Rational> parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  double to_double() const;
  std::string str() const;  // "p" or "p/q"

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;  // > 0
};

/// Positive generator of the additive group sum_i value_i * Z.
/// Equals gcd(numerators)/lcm(denominators) over a common denominator.
/// Throws input_error when every value is zero.
Rational rational_gcd(std::span<const Rational> values);

}  // namespace qginv
