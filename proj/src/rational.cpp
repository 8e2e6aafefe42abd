#include "qginv/rational.hpp"

#include <cctype>

namespace qginv {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) throw input_error("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(BigInt(mp::abs(num_)), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<BigInt> {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(std::move(*n));
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw input_error("rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational rational_gcd(std::span<const Rational> values) {
  BigInt den_lcm = 1;
  bool any_nonzero = false;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    any_nonzero = true;
    den_lcm = mp::lcm(den_lcm, v.den());
  }
  if (!any_nonzero) throw input_error("rational_gcd: all values are zero");
  BigInt g = 0;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    g = mp::gcd(g, BigInt(mp::abs(v.num()) * (den_lcm / v.den())));
  }
  return Rational(g, den_lcm);
}

}  // namespace qginv
