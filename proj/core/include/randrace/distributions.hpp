#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "randrace/philox.hpp"

namespace randrace::mc {

struct Uniform {
  double lo = 0.0;
  double hi = 1.0;
};

struct Exponential {
  double rate = 1.0;
};

struct Normal {
  double mean = 0.0;
  double sd = 1.0;
};

struct LogNormal {
  double log_mean = 0.0;
  double log_sd = 1.0;
};

// value = 3^K (1 + noise * xi), K uniform on {1..max_exponent}, xi uniform
// on (-1,1). Continuous for noise > 0; at noise = 0 it is discrete and is
// treated as a scale-rank design (see the alternation notes in race.hpp).
// A draw always consumes two stream values, so the noise setting never
// shifts the stream.
struct PowersOfThree {
  int max_exponent = 40;
  double noise = 0.0;
};

using DistributionSpec =
    std::variant<Uniform, Exponential, Normal, LogNormal, PowersOfThree>;

void validate(const DistributionSpec& spec);  // throws std::domain_error
double sample(const DistributionSpec& spec, CounterStream& rng);
std::string describe(const DistributionSpec& spec);  // "exp(1)", "pow3(40,0)", ...

// CLI-facing: names uniform|exp|normal|lognormal|pow3 with positional
// parameters; missing parameters take the defaults above.
DistributionSpec parse_distribution(std::string_view name,
                                    std::span<const double> params);

// AS241-style rational approximation of the standard normal quantile,
// accurate to near double precision. One uniform in, one normal out, which
// keeps the per-sample stream consumption fixed.
double inverse_normal_cdf(double p);

}  // namespace randrace::mc
