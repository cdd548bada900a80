#include "beldef/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "beldef/errors.hpp"

namespace beldef {

Rational rational_pow(const Rational& base, unsigned long k) {
  Rational result = 1;
  Rational acc = base;
  while (k != 0) {
    if (k & 1ul) result *= acc;
    k >>= 1;
    if (k != 0) acc *= acc;
  }
  return result;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw ParseError("empty rational literal", 0);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction: " + text, 0);
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: " + text, 0);
    value = Rational(BigInt(num), d);
  } else {
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      const std::string exp = s.substr(e + 1);
      std::string exp_digits = exp;
      bool exp_neg = false;
      if (!exp_digits.empty() && (exp_digits[0] == '+' || exp_digits[0] == '-')) {
        exp_neg = exp_digits[0] == '-';
        exp_digits.erase(0, 1);
      }
      if (!all_digits(exp_digits)) throw ParseError("malformed exponent: " + text, 0);
      exponent = std::strtol(exp_digits.c_str(), nullptr, 10);
      if (exp_neg) exponent = -exponent;
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("malformed rational: " + text, 0);
    value = Rational(BigInt(digits));
    if (exponent > 0) {
      value *= rational_pow(Rational(10), static_cast<unsigned long>(exponent));
    } else if (exponent < 0) {
      value /= rational_pow(Rational(10), static_cast<unsigned long>(-exponent));
    }
  }
  return negative ? -value : value;
}

std::string to_string(const Rational& r) {
  return r.str();
}

}  // namespace beldef
