#include "patree/rational.hpp"

#include "patree/errors.hpp"

#include <cctype>

namespace patree {

namespace {

boost::multiprecision::cpp_int parse_integer(const std::string& digits) {
  if (digits.empty()) throw DomainError("empty integer");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad integer '" + digits + "'");
  return boost::multiprecision::cpp_int(digits);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(parse_integer(s));
  } else {
    auto den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    r = Rational(parse_integer(s.substr(0, slash)), den);
  }
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace patree
