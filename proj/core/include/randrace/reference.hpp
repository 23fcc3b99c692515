#pragma once

#include "randrace/rational.hpp"

// Exact closed forms for every race probability and count, in arbitrary-
// precision rational arithmetic. These are the formula side of the
// cross-check matrix; the enumeration engines and the Monte Carlo engine are
// the other sides. No floating point here.
namespace randrace::reference {

// One racer leads after every one of the n steps: C(2n,n)/4^n, the same for
// every continuous step distribution.
Rational lead_prob(int n);

// Signed permutations of an n-element generic set whose prefix sums are all
// strictly positive: n! C(2n,n) / 2^n = (2n-1)!!.
BigInt ballot_signed_perm_count(int n);

// Race of m steps conditioned to tie at step m: probability the same racer
// is strictly ahead at steps 1..m-1, which the cycle lemma puts at 1/m.
Rational tied_lead_prob(int m);

// Simple random walk never dips below 0. Identical for 2n and 2n-1 steps
// (the last step of an even-length walk cannot be the spoiler), so this is
// lead_prob(ceil(steps/2)).
Rational srw_nonneg_prob(int steps);

// Ballot count, a votes against b with a >= b, counted in random order:
// probability the loser is never strictly ahead, (a-b+1)/(a+1).
Rational ballot_never_behind_prob(int a, int b);

// Walk of n +-1 steps conditioned to end at t >= 0 (parities must match):
// probability it never dips below 0, 2(t+1)/(n+t+2).
Rational walk_nonneg_given_end_prob(int n, int t);

// Random Motzkin path of length L (step law 1/4, 1/2, 1/4) stays >= 0:
// C(2L+2, L+1) / 2^(2L+1). Parameterized by the Motzkin length itself; the
// L = n-1 instance is the n-step lazy race value C(2n,n)/2^(2n-1).
Rational motzkin_nonneg_prob(int L);

// Two uniform random compositions of n: probability the first weakly
// majorizes the second. Equals motzkin_nonneg_prob(n-1) = 2*lead_prob(n).
Rational composition_majorization_prob(int n);

// Exponential race: probability that the merged stop-ownership sequence
// follows the strict alternating pattern for all 2n stops, 4^-n. Note the
// alternation *event* (X ahead at odd steps, Y at even) only pins down the
// first 2n-1 stop owners, so its probability is 2*4^-n; see race.hpp.
Rational alternation_exponential_prob(int n);

// Two iid coordinate vectors in R^n are comparable under the coordinatewise
// order: 2^(1-n), independent of the coordinate distribution.
Rational comparable_vectors_prob(int n);

}  // namespace randrace::reference
