#include "randrace/rational.hpp"

#include <stdexcept>

namespace randrace {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::domain_error("empty rational literal");

  const auto slash = s.find('/');
  const auto dot = s.find('.');
  if (slash != std::string::npos && dot != std::string::npos)
    throw std::domain_error("rational literal mixes '/' and '.': " + s);

  try {
    if (dot != std::string::npos) {
      const std::string ipart = s.substr(0, dot);
      const std::string fpart = s.substr(dot + 1);
      if (fpart.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(s);
      const bool neg = !ipart.empty() && ipart[0] == '-';
      std::string digits = neg ? ipart.substr(1) : ipart;
      if (!digits.empty() && digits[0] == '+') digits = digits.substr(1);
      if (digits.empty() && fpart.empty()) throw std::invalid_argument(s);
      BigInt num = digits.empty() ? BigInt(0) : BigInt(digits);
      BigInt den = 1;
      for (char c : fpart) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
      if (neg) num = -num;
      return make_rational(num, den);
    }
    Rational q(s);  // handles "a" and "a/b"
    if (q.get_den() == 0) throw std::domain_error("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::domain_error("cannot parse rational: " + s);
  }
}

std::vector<BigInt> scale_to_integers(std::span<const Rational> values) {
  BigInt lcm = 1;
  for (const Rational& v : values)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const Rational& v : values)
    out.push_back(v.get_num() * (lcm / v.get_den()));
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace randrace
