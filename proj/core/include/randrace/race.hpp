#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "randrace/distributions.hpp"

namespace randrace::mc {

// One sampled race: n steps per racer plus, on request, n continuation
// steps each. The continuation extends the walks past the race so that stop
// ownership can be read off the first 2n merged stops of *unbounded* walks,
// which is the regime in which ownership signs are uniform; the race's own
// merged stops are always split n/n and cannot be.
struct RaceTrace {
  int n = 0;
  std::vector<double> x_steps, y_steps;    // length n
  std::vector<double> x_prefix, y_prefix;  // length n
  std::vector<double> x_cont, y_cont;      // continuation prefixes, length n or empty

  bool has_continuation() const { return !x_cont.empty(); }

  struct Stop {
    double position;
    int owner;  // 0 = X, 1 = Y
  };
  // The race's own 2n stop points, sorted by position (n per racer).
  std::vector<Stop> merged_stops() const;
};

enum class EventKind {
  lead_all_the_way,   // strict lead after every step
  never_behind,       // weak lead (>=) after every step
  alternation,        // X strictly ahead at odd steps, Y at even steps
  comparable_vectors, // step vectors comparable under the coordinatewise order
  tied_dominance,     // i-th order statistics strictly dominate, see below
};

struct EventSpec {
  EventKind kind = EventKind::lead_all_the_way;
  int m = 0;  // tied_dominance sample count per racer; ignored otherwise
};

std::string describe(const EventSpec& event);

enum class Outcome { success, failure, tie };

// Deterministic function of (spec, n, seed, trial): the race steps are drawn
// first, so the race part of a trace is identical with and without the
// continuation.
RaceTrace sample_race(const DistributionSpec& spec, int n, std::uint64_t seed,
                      std::uint64_t trial, bool with_continuation = false);

// Three-valued event check. Comparisons are evaluated in step order and the
// first equality hit in a strict comparison makes the trial a tie.
//
// The alternation event also reports a tie when two of the 2n step values
// coincide exactly: its exact reference is the distinct-scale rank oracle,
// and coincident draws (possible only for discrete specs such as
// powers-of-three with zero noise) fall outside that model. For continuous
// distributions this has probability zero.
Outcome evaluate_event(const RaceTrace& trace, const EventSpec& event);

// Ownership signs of the first 2n merged stop points of the extended walks:
// -1 where the stop belongs to X, +1 where it belongs to Y. X leads all the
// way iff every prefix sum is >= 0. Requires a trace sampled with
// continuation; coincident stop points raise tie_error.
std::vector<int> ownership_signs(const RaceTrace& trace);

// Draws m values per racer, sorts both samples, and succeeds iff the i-th
// smallest X value strictly exceeds the i-th smallest Y value for every i.
// Success probability 1/(m+1) for any continuous distribution.
Outcome tied_dominance_trial(int m, const DistributionSpec& spec,
                             std::uint64_t seed, std::uint64_t trial);

// Multiplicative race: factors from a lognormal spec, compared by running
// products at every step. Trial-equivalent to the additive race on the log
// factors.
Outcome multiplicative_race_trial(const DistributionSpec& lognormal_spec,
                                  int n, std::uint64_t seed,
                                  std::uint64_t trial);

namespace detail {
// Allocation-free variant for hot trial loops.
void sample_race_into(const DistributionSpec& spec, int n, std::uint64_t seed,
                      std::uint64_t trial, bool with_continuation,
                      RaceTrace& out);
}  // namespace detail

}  // namespace randrace::mc
