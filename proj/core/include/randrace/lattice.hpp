#pragma once

#include <optional>

#include "randrace/path.hpp"
#include "randrace/rational.hpp"

namespace randrace::exact {

// Balanced {U,D} path -> {U,D} path of the same length staying >= 0.
// The path splits into minimal zero-to-zero segments; segments starting with
// U map to themselves, segments starting with D are flipped stepwise except
// that the final step stays U, raising the running baseline by 2. Bijective
// onto the nonnegative paths of that length.
Path updown_to_nonneg(const Path& balanced);

// Inverse map: parses the path into segments against the rising baseline.
// A segment that returns to the baseline is copied; one that never does ends
// just after the last visit to baseline+1, gets its final step set back to D
// and is flipped. Input must stay >= 0 and have even length.
Path updown_to_endzero(const Path& nonneg);

// {U,D} path of length 2n starting with U -> Motzkin path of length n-1:
// the first and last steps are dropped and the interior pairs (2,3), (4,5),
// ... are contracted by UU->U, DD->D, UD or DU->H. Never-dips-below-zero is
// preserved in both directions.
Path contract_to_motzkin(const Path& updown);

struct StepWeights {
  Rational up = 0;
  Rational horizontal = 0;
  Rational down = 0;
};

// Height-indexed dynamic program over lattice paths: the exact probability
// mass (or count, when the weights are all 1) of the paths of the given
// length meeting the constraints. A zero weight disables a step kind.
Rational count_paths_dp(int length, const StepWeights& weights,
                        bool stay_nonneg,
                        std::optional<int> end = std::nullopt);

}  // namespace randrace::exact
