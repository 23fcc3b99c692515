#pragma once

#include <span>
#include <vector>

#include "randrace/generic_set.hpp"
#include "randrace/rational.hpp"
#include "randrace/signed_perm.hpp"

namespace randrace::exact {

// Values v with target < v < a1 (a1 = first element) at which replacing a1
// by v produces two distinct disjoint index sets of equal weight, sorted
// descending. Genericity of the rest of the set makes the collision at each
// such v unique and the values pairwise distinct. The target itself must not
// be a collision value ("degenerate target").
std::vector<Rational> collision_deltas(const GenericSet& set,
                                       const Rational& target);

// Transports a ballot signed permutation across a change of the first
// element that crosses at most one collision value. If the (order, signs)
// pattern keeps the ballot property under the new values it is returned
// unchanged; otherwise there is a unique prefix with negative sum, and that
// prefix is reversed and negated. Applying the map along the reverse hop
// restores the input.
//
// The value-level overload asks only for what the construction needs of the
// departure set: a collision-free first element and a certified-generic
// tail. (An endpoint like {1/2, 3, 1} is collision-free but fails the full
// +-2-coefficient test via 2*(1/2) = 1.)
SignedPermutation collision_step_map(const SignedPermutation& s,
                                     std::span<const Rational> from_values,
                                     const Rational& new_first);
SignedPermutation collision_step_map(const SignedPermutation& s,
                                     const GenericSet& from,
                                     const Rational& new_first);

// Intermediate first-element values for walking a1 down (or up) to target
// with one collision crossed per hop. Every intermediate stop is chosen
// certified generic; the final entry is the target itself, which must be
// collision-free. Returns {target} when no collision lies in between.
std::vector<Rational> collision_walk_stops(const GenericSet& set,
                                           const Rational& target);

namespace detail {
// All candidate collision values w(J) - w(I') over disjoint subsets I', J of
// the tail (every subset pair, unrestricted sign/interval), deduplicated.
std::vector<Rational> tail_collision_values(std::span<const Rational> tail);
}  // namespace detail

}  // namespace randrace::exact
