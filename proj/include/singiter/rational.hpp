#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace singiter {

// Exact rational arithmetic. Cylinder masses at depth 40 need ~2^80 wide
// denominators, so a fixed-width integer backend is not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Lifts a double to the rational it represents exactly.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite value");
  return Rational(x);
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "n/d", plain integers, and terminating decimals ("0.25" -> 1/4).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("rational: malformed number '" + text + "'");
  const std::size_t frac_len = text.size() - dot - 1;
  BigInt den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(BigInt(digits), den);
}

}  // namespace singiter
