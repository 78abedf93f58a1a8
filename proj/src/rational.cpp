#include "conirr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace conirr {

namespace {

// gmp_int treats a leading zero as an octal prefix.
std::string strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return std::string(s);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den))
      throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (!all_digits(digits))
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");

  Integer n{strip_zeros(digits)};
  if (num.front() == '-') n = -n;
  if (den.empty()) return Rational(n);
  Integer d{strip_zeros(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

std::string to_string(const Rational& value) {
  const Integer den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

RationalVector primitive_integer(const RationalVector& v) {
  Integer lcm_den = 1;
  for (Index i = 0; i < v.size(); ++i) lcm_den = lcm(lcm_den, denominator(v(i)));
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, numerator(v(i) * lcm_den));
  if (g == 0) return v;
  RationalVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) * Rational(lcm_den) / Rational(g);
  return out;
}

}  // namespace conirr
