#pragma once

#include <vector>

#include "randrace/rational.hpp"

namespace randrace::exact {

// A zero-sum sequence none of whose proper cyclic substrings sums to zero.
// Cyclic substring sums are differences of the m prefix sums P_0..P_{m-1},
// so validity is exactly: total zero and all prefix sums distinct.
class CycleSequence {
 public:
  static CycleSequence validate(std::vector<Rational> entries);

  const std::vector<Rational>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

 private:
  explicit CycleSequence(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}
  std::vector<Rational> entries_;
};

// 1-based start index of the unique rotation whose partial sums are all
// nonnegative: one past the argmin of the prefix sums. The uniqueness claim
// is re-verified by checking every rotation; a violation (impossible for a
// valid sequence) raises verification_error.
int spitzer_rotation(const CycleSequence& z);

}  // namespace randrace::exact
