#include "randrace/reference.hpp"

#include <stdexcept>

#include "randrace/errors.hpp"

namespace randrace::reference {

namespace {

unsigned long as_positive(int n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + " must be >= 1");
  return static_cast<unsigned long>(n);
}

}  // namespace

Rational lead_prob(int n) {
  const unsigned long m = as_positive(n, "n");
  return make_rational(binomial(2 * m, m), pow2(2 * m));
}

BigInt ballot_signed_perm_count(int n) {
  const unsigned long m = as_positive(n, "n");
  BigInt b = factorial(m) * binomial(2 * m, m);
  const BigInt d = pow2(m);
  if (!mpz_divisible_p(b.get_mpz_t(), d.get_mpz_t()))
    throw verification_error("ballot count not divisible by 2^n");
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  return b;
}

Rational tied_lead_prob(int m) {
  if (m < 2) throw std::domain_error("tied race needs m >= 2 steps");
  return make_rational(1, m);
}

Rational srw_nonneg_prob(int steps) {
  const unsigned long s = as_positive(steps, "steps");
  return lead_prob(static_cast<int>((s + 1) / 2));
}

Rational ballot_never_behind_prob(int a, int b) {
  if (b < 0 || a < b) throw std::domain_error("ballot needs a >= b >= 0");
  return make_rational(a - b + 1, a + 1);
}

Rational walk_nonneg_given_end_prob(int n, int t) {
  as_positive(n, "n");
  if (t < 0 || t > n) throw std::domain_error("end height t must be in [0, n]");
  if ((n - t) % 2 != 0)
    throw std::domain_error("walk length and end height must share parity");
  return make_rational(2 * (t + 1), n + t + 2);
}

Rational motzkin_nonneg_prob(int L) {
  if (L < 0) throw std::domain_error("Motzkin length must be >= 0");
  const unsigned long l = static_cast<unsigned long>(L);
  return make_rational(binomial(2 * l + 2, l + 1), pow2(2 * l + 1));
}

Rational composition_majorization_prob(int n) {
  const unsigned long m = as_positive(n, "n");
  return make_rational(binomial(2 * m, m), pow2(2 * m - 1));
}

Rational alternation_exponential_prob(int n) {
  const unsigned long m = as_positive(n, "n");
  return make_rational(1, pow2(2 * m));
}

Rational comparable_vectors_prob(int n) {
  const unsigned long m = as_positive(n, "n");
  return make_rational(1, pow2(m - 1));
}

}  // namespace randrace::reference
