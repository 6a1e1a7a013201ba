#include "planelab/scalar.hpp"

#include <cctype>

namespace planelab {

thread_local unsigned AdaptivePrecision::bits_ = 128;

namespace {
BigInt parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string digits = s.substr(i);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad integer literal: " + s);
  size_t nz = digits.find_first_not_of('0');  // GMP reads leading 0 as octal
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  BigInt v(digits);
  return neg ? BigInt(-v) : v;
}
}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    return Rational(num, den);
  }
  // Decimal string: sign, integer part, optional fraction, optional exponent.
  std::string t = s;
  bool neg = false;
  size_t i = 0;
  if (t[i] == '+' || t[i] == '-') {
    neg = t[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  long exponent = 0;
  bool seen_dot = false, any_digit = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational literal: " + s);
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      exponent = std::stol(t.substr(i + 1));
      break;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  if (!any_digit) throw std::invalid_argument("bad rational literal: " + s);
  // Strip leading zeros: the GMP string constructor would read them as octal.
  size_t nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  BigInt num(digits);
  Rational r(num, 1);
  long shift = exponent - frac_digits;
  if (shift > 0) {
    BigInt p = pow(BigInt(10), static_cast<unsigned>(shift));
    r *= Rational(p, 1);
  } else if (shift < 0) {
    BigInt p = pow(BigInt(10), static_cast<unsigned>(-shift));
    r /= Rational(p, 1);
  }
  return neg ? -r : r;
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace planelab
