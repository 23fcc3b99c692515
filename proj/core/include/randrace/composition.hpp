#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "randrace/path.hpp"

namespace randrace::exact {

// Ordered sequence of positive integer parts.
struct Composition {
  std::vector<int> parts;

  static Composition validate(std::vector<int> parts);
  int total() const;

  friend bool operator==(const Composition&, const Composition&) = default;
};

// Bit-string encoding of a composition of n as n-1 bits: each part u
// contributes u-1 zeros and the separators between parts become 1s.
// (3,1,2) <-> "00110"; the one-part composition (n) <-> n-1 zeros.
std::string encode_composition(const Composition& c);
Composition decode_composition(std::string_view bits);

// Weak majorization: prefix sums of u dominate (>=) those of v for k up to
// the shorter length. Both must be compositions of the same total.
bool majorizes_weak(const Composition& u, const Composition& v);

// Positionwise Motzkin path of two equal-length bit strings: U where
// s < s', H where equal, D where s > s'. The composition encoded by s
// weakly majorizes the one encoded by s' iff the path never dips below 0.
Path motzkin_from_bitpair(std::string_view s, std::string_view s_prime);

}  // namespace randrace::exact
