#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "randrace/rational.hpp"

namespace randrace::exact {

inline constexpr int kGenericityCap = 12;

// Bounded-coefficient genericity test: true iff no nonzero coefficient
// vector c in {-2,-1,0,1,2}^n has sum c_i * a_i = 0. Coefficients up to 2 in
// absolute value are exactly what the collision argument consumes, so this
// decidable test substitutes for full rational independence.
// Values must be distinct and positive. n > max_n raises cap_exceeded_error.
bool is_generic(std::span<const Rational> values, int max_n = kGenericityCap);

// Finite ordered set of distinct positive rationals carrying a genericity
// certificate: construction runs is_generic and fails on a dependent set.
class GenericSet {
 public:
  static GenericSet certify(std::vector<Rational> values,
                            int max_n = kGenericityCap);

  const std::vector<Rational>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Rational& at(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  // Total weight of an index subset (0-based indices).
  Rational weight(std::span<const int> indices) const;

 private:
  explicit GenericSet(std::vector<Rational> values) : values_(std::move(values)) {}
  std::vector<Rational> values_;
};

// Deterministic rejection sampler: numerators and denominators uniform over
// [1, 2^32 - 1], resampled until the set is distinct and certified generic.
// Rejection is essentially never exercised at these sizes.
GenericSet random_generic_set(int n, std::uint64_t seed);

}  // namespace randrace::exact
