#pragma once

#include <span>
#include <vector>

#include "randrace/generic_set.hpp"
#include "randrace/rational.hpp"

namespace randrace::exact {

// A permutation of {0..n-1} plus a sign per position. Entry i of the
// resolved sequence is signs[i] * values[order[i]].
struct SignedPermutation {
  std::vector<int> order;
  std::vector<int> signs;  // entries in {-1, +1}

  std::vector<Rational> resolve(std::span<const Rational> values) const;
  std::vector<Rational> resolve(const GenericSet& set) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// Every prefix sum strictly positive. The empty sequence qualifies vacuously.
bool has_ballot_property(std::span<const Rational> seq);

}  // namespace randrace::exact
