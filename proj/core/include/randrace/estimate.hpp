#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "randrace/race.hpp"

namespace randrace::mc {

inline constexpr double kZ95 = 1.959963984540054;    // two-sided 95%
inline constexpr double kZ999 = 3.2905267314919255;  // two-sided 99.9%

struct Interval {
  double low = 0.0;
  double high = 1.0;
  bool contains(double p) const { return low <= p && p <= high; }
};

// Wilson score interval for a binomial proportion; z is the two-sided
// normal quantile. Better behaved than the normal approximation for the
// rare events (1/4^n and friends) this project estimates.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z);

struct Estimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t ties = 0;
  double ci_low = 0.0;   // Wilson bounds on successes/trials at level z
  double ci_high = 1.0;
  double z = kZ95;
  std::uint64_t seed = 0;
  std::string spec;  // event + distribution echo

  double point() const;
  // Tie trials excluded from the denominator: the estimator whose target is
  // a conditional-on-nondegenerate reference value (the rank oracle).
  double point_excluding_ties() const;
  Interval interval_excluding_ties() const;

  // Flagged when the tie rate reaches 1e-6; for a continuous distribution a
  // flagged run indicates a problem, for a discrete one it is expected.
  bool tie_flagged() const;
};

// Deterministic trial engine. The trial function maps a trial index to an
// outcome and must depend on nothing else; the index range is split across
// workers and the counters summed, so the estimate is bit-identical for any
// worker count. workers = 0 picks a machine-dependent count.
Estimate run_trials(const std::function<Outcome(std::uint64_t)>& trial,
                    std::uint64_t trials, std::uint64_t seed, double z = kZ95,
                    unsigned workers = 0);

Estimate estimate_probability(const EventSpec& event,
                              const DistributionSpec& dist, int n_or_m,
                              std::uint64_t trials, std::uint64_t seed,
                              double z = kZ95, unsigned workers = 0);

Estimate estimate_multiplicative(const DistributionSpec& lognormal_spec,
                                 int n, std::uint64_t trials,
                                 std::uint64_t seed, double z = kZ95,
                                 unsigned workers = 0);

}  // namespace randrace::mc
