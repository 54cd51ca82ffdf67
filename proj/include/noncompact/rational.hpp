#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noncompact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Carries measures, breakpoints and exponents; always
/// stored in reduced form with a positive denominator. Arbitrary precision,
/// so repeated halving (s_{k+1} = s_k/2 down to 2^-200 and beyond) stays exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(num, den);
  }
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

  /// Accepts "a" or "a/b" with optional sign.
  static Rational parse(std::string_view s);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  double to_double() const { return v_.convert_to<double>(); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_positive() const { return v_ > 0; }
  bool is_negative() const { return v_ < 0; }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Integer power; e < 0 inverts (throws on zero base).
  Rational pow_int(long e) const;

  Rational abs() const { return is_negative() ? -*this : *this; }

  std::string to_string() const;

private:
  boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); the coarsest grid containing both.
Rational gcd(const Rational& a, const Rational& b);

}  // namespace noncompact
