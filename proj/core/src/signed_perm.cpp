#include "randrace/signed_perm.hpp"

#include <stdexcept>

namespace randrace::exact {

std::vector<Rational> SignedPermutation::resolve(
    std::span<const Rational> values) const {
  if (order.size() != signs.size() || order.size() != values.size())
    throw std::domain_error("signed permutation size mismatch");
  std::vector<Rational> out;
  out.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int idx = order[i];
    if (idx < 0 || idx >= static_cast<int>(values.size()))
      throw std::domain_error("signed permutation index out of range");
    if (signs[i] != 1 && signs[i] != -1)
      throw std::domain_error("signs must be +1 or -1");
    out.push_back(signs[i] * values[static_cast<std::size_t>(idx)]);
  }
  return out;
}

std::vector<Rational> SignedPermutation::resolve(const GenericSet& set) const {
  return resolve(std::span<const Rational>(set.values()));
}

bool has_ballot_property(std::span<const Rational> seq) {
  Rational prefix = 0;
  for (const Rational& s : seq) {
    prefix += s;
    if (prefix <= 0) return false;
  }
  return true;
}

}  // namespace randrace::exact
