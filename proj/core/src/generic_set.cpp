#include "randrace/generic_set.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "randrace/errors.hpp"

namespace randrace::exact {

namespace {

void validate_values(std::span<const Rational> values) {
  if (values.empty()) throw std::domain_error("empty value set");
  for (const Rational& v : values)
    if (v <= 0) throw std::domain_error("set values must be positive");
  std::vector<Rational> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::domain_error("set values must be distinct");
}

// All sums c . w over c in {-2..2}^|w|, as a value -> multiplicity map.
std::map<BigInt, long> coefficient_sums(std::span<const BigInt> w) {
  std::map<BigInt, long> sums;
  std::vector<int> coeff(w.size(), -2);
  BigInt acc = 0;
  for (const BigInt& v : w) acc -= 2 * v;
  for (;;) {
    ++sums[acc];
    std::size_t i = 0;
    while (i < coeff.size() && coeff[i] == 2) {
      acc -= 4 * w[i];
      coeff[i] = -2;
      ++i;
    }
    if (i == coeff.size()) break;
    ++coeff[i];
    acc += w[i];
  }
  return sums;
}

}  // namespace

bool is_generic(std::span<const Rational> values, int max_n) {
  validate_values(values);
  const int n = static_cast<int>(values.size());
  if (n > max_n)
    throw cap_exceeded_error("genericity test capped at n = " +
                             std::to_string(max_n));

  // Meet in the middle: a nonzero coefficient vector annihilates the values
  // iff some left-half sum cancels some right-half sum with not both halves'
  // coefficients zero. Same predicate as the direct 5^n scan.
  const std::vector<BigInt> w = scale_to_integers(values);
  const std::size_t h = w.size() / 2;
  const auto left = coefficient_sums(std::span(w).subspan(0, h));
  const auto right = coefficient_sums(std::span(w).subspan(h));

  for (const auto& [sum, count] : right) {
    const auto it = left.find(-sum);
    if (it == left.end()) continue;
    if (sum != 0) return false;                 // nonzero halves cancel
    if (count > 1 || it->second > 1) return false;  // a half vanishes on its own
  }
  return true;
}

GenericSet GenericSet::certify(std::vector<Rational> values, int max_n) {
  if (!is_generic(values, max_n))
    throw std::domain_error("set is not generic under the +-2 coefficient test");
  return GenericSet(std::move(values));
}

Rational GenericSet::weight(std::span<const int> indices) const {
  Rational w = 0;
  for (int i : indices) w += at(i);
  return w;
}

GenericSet random_generic_set(int n, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("set size must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1, 0xFFFFFFFFu);
  for (;;) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(values.size()) < n) {
      Rational v = make_rational(BigInt(dist(rng)), BigInt(dist(rng)));
      if (std::find(values.begin(), values.end(), v) == values.end())
        values.push_back(std::move(v));
    }
    if (is_generic(values)) return GenericSet::certify(std::move(values));
  }
}

}  // namespace randrace::exact
