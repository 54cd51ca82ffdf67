#include "noncompact/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace noncompact {

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(boost::multiprecision::cpp_rational(BigInt(std::string(s))));
    }
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(boost::multiprecision::cpp_rational(num, den));
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational::parse: bad literal '" + std::string(s) + "'");
  }
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw std::invalid_argument("Rational::pow_int: zero base, negative exponent");
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigInt num = boost::multiprecision::pow(numerator(), static_cast<unsigned>(n));
  BigInt den = boost::multiprecision::pow(denominator(), static_cast<unsigned>(n));
  if (invert) std::swap(num, den);
  return Rational(boost::multiprecision::cpp_rational(num, den));
}

std::string Rational::to_string() const {
  std::string s = numerator().str();
  if (denominator() != 1) {
    s += "/";
    s += denominator().str();
  }
  return s;
}

Rational abs(const Rational& x) { return x.abs(); }
Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

Rational gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  BigInt num = boost::multiprecision::gcd(a.numerator(), b.numerator());
  BigInt den = boost::multiprecision::lcm(a.denominator(), b.denominator());
  return Rational(boost::multiprecision::cpp_rational(num, den)).abs();
}

}  // namespace noncompact
