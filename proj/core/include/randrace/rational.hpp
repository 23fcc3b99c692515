#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace randrace {

using BigInt = mpz_class;

// Always kept canonical: lowest terms, positive denominator. Every arithmetic
// result of canonical operands stays canonical, so only construction from raw
// numerator/denominator pairs needs care (use make_rational).
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt pow2(unsigned long e);

// "num/den" in lowest terms, or plain "num" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

// Accepts "7", "-7", "7/2", "-7/2" and decimal forms like "3.5" or "-.25".
Rational parse_rational(std::string_view text);

// Image of the values under multiplication by the LCM of their denominators
// (order preserved). Sign tests on integer combinations are unchanged.
std::vector<BigInt> scale_to_integers(std::span<const Rational> values);

double to_double(const Rational& q);

}  // namespace randrace
