#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "measure.hpp"
#include "rational.hpp"

namespace singiter {

inline constexpr int kMaxOracleDigits = 128;

namespace detail {

inline void check_unit_interval(const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("oracles: x outside [0,1]");
}

inline void check_digit_count(int digits) {
  if (digits < 1 || digits > kMaxOracleDigits)
    throw std::invalid_argument("oracles: digit count outside [1,128]");
}

// Greedy base-`base` digits of x in [0,1], terminating form. The clamp fires
// only at x = 1, which gets the repeating all-(base-1) expansion.
inline std::vector<int> greedy_digits(Rational x, int base, int count) {
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(count));
  Rational r = std::move(x);
  for (int k = 0; k < count; ++k) {
    r *= base;
    BigInt d = numerator(r) / denominator(r);
    if (d > base - 1) d = base - 1;
    digits.push_back(d.convert_to<int>());
    r -= Rational(d);
  }
  return digits;
}

}  // namespace detail

inline std::vector<int> ternary_digits(const Rational& x, int count) {
  detail::check_unit_interval(x);
  detail::check_digit_count(count);
  return detail::greedy_digits(x, 3, count);
}

inline std::vector<int> binary_digits(const Rational& x, int count) {
  detail::check_unit_interval(x);
  detail::check_digit_count(count);
  return detail::greedy_digits(x, 2, count);
}

// C(x) = 2^-n + (1/2) sum_{k<n} a_k 2^-k, where n is the position of the
// first ternary digit equal to 1 (no such digit: the sum runs over all of
// them). Evaluating on a truncated digit list drops a tail of at most
// 2^-digits.
inline Rational cantor_from_ternary_digits(std::span<const int> digits) {
  Rational sum(0);
  Rational scale(1, 2);
  for (int a : digits) {
    if (a == 1) return sum + scale;
    if (a == 2) sum += scale;
    scale /= 2;
  }
  return sum;
}

inline Rational cantor_exact(const Rational& x, int digits) {
  detail::check_unit_interval(x);
  detail::check_digit_count(digits);
  const auto a = detail::greedy_digits(x, 3, digits);
  return cantor_from_ternary_digits(a);
}

inline double cantor_classic(double x, int digits = 60) {
  return to_double(cantor_exact(rational_from_double(x), digits));
}

// Binary-expansion form of the solution of F(x) = p F(2x) + q F(2x-1):
// digit 0 multiplies the remaining weight by p, digit 1 contributes
// p * (weight so far) and multiplies by q. Truncation error <= max{p,q}^bits.
inline Rational lebesgue_exact(const BernoulliParam& m, const Rational& x, int bits) {
  detail::check_unit_interval(x);
  detail::check_digit_count(bits);
  const auto b = detail::greedy_digits(x, 2, bits);
  const Rational p = m.p();
  const Rational q = m.q();
  Rational sum(0);
  Rational weight(1);
  for (int digit : b) {
    if (digit == 1) {
      sum += p * weight;
      weight *= q;
    } else {
      weight *= p;
    }
  }
  return sum;
}

inline double lebesgue_singular(const BernoulliParam& m, double x, int bits = 60) {
  return to_double(lebesgue_exact(m, rational_from_double(x), bits));
}

// Continued fraction x = [0; a_1, ..., a_m] of a rational in [0,1], by the
// Euclidean algorithm (terminating form, so a_m >= 2 except for x = 1).
inline std::vector<BigInt> continued_fraction(const Rational& x) {
  detail::check_unit_interval(x);
  std::vector<BigInt> terms;
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  while (num != 0) {
    terms.push_back(den / num);
    BigInt r = den % num;
    den = num;
    num = r;
  }
  return terms;
}

// ?(x) = sum_k (-1)^(k+1) 2^(1 - (a_1+...+a_k)), a dyadic rational.
inline Rational minkowski_exact(const Rational& x) {
  const auto terms = continued_fraction(x);
  Rational sum(0);
  BigInt cumulative(0);
  int sign = 1;
  for (const auto& a : terms) {
    cumulative += a;
    const auto shift = (cumulative - 1).convert_to<unsigned>();
    const Rational term(BigInt(1), BigInt(1) << shift);
    sum += sign > 0 ? term : -term;
    sign = -sign;
  }
  return sum;
}

inline double minkowski_question(const Rational& x) { return to_double(minkowski_exact(x)); }

}  // namespace singiter
