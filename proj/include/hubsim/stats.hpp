#pragma once

#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <span>

namespace hubsim {

double mean(std::span<const SimTime> samples);

/// Population variance (divide by n).
double variance(std::span<const SimTime> samples);

/// Nearest-rank percentile: the ceil(p/100 * n)-th order statistic (1-based).
/// Requires non-empty samples and 0 <= p <= 100.
SimTime percentile(std::span<const SimTime> samples, double p);

} // namespace hubsim
