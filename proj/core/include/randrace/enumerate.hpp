#pragma once

#include <span>
#include <vector>

#include "randrace/generic_set.hpp"
#include "randrace/rational.hpp"
#include "randrace/signed_perm.hpp"

namespace randrace::exact {

inline constexpr int kEnumerationCap = 10;
inline constexpr int kDominanceCap = 16;
inline constexpr int kMajorizationCap = 12;
inline constexpr int kRankOracleCap = 4;

// b(A): number of signed permutations of the set with the ballot property.
// Pruned depth-first search with a prefix-sum cutoff over scaled integer
// values; for a generic set, no prefix sum can hit zero.
BigInt count_ballot_signed_perms(const GenericSet& set,
                                 int max_n = kEnumerationCap);

// Same count over raw values with no genericity requirement (prefix sums
// that land exactly on zero simply fail the strict test). Used to check the
// invariances of b under sign flips and reordering of the values.
BigInt count_ballot_sequences(std::span<const Rational> values,
                              int max_n = kEnumerationCap);

// The qualifying signed permutations themselves, in DFS order.
std::vector<SignedPermutation> ballot_signed_perms(const GenericSet& set,
                                                   int max_n = kEnumerationCap);

// Interleavings of m U-labels and m V-labels in which the i-th V precedes
// the i-th U for every i, counted by plain DFS over valid prefixes. Equals
// the m-th Catalan number; dominance probability is this over C(2m,m).
BigInt dominance_count(int m, int max_m = kDominanceCap);

// Exact majorization probability for a uniform pair of compositions of n:
// enumerates all 4^(n-1) encoded pairs and counts the majorizing ones.
Rational majorization_probability_exact(int n, int max_n = kMajorizationCap);

// Alternation probability under strict scale separation: enumerates all
// (2n)! assignments of distinct scale ranks to the 2n draws; each prefix
// comparison is decided by the owner of the largest rank seen so far.
// Comes out to 1/(2^n n!): 1/2, 1/8, 1/48, ...
Rational alternation_rank_oracle(int n, int max_n = kRankOracleCap);

}  // namespace randrace::exact
