#include "hubsim/stats.hpp"

#include "hubsim/sim/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hubsim {

double mean(std::span<const SimTime> samples) {
    if (samples.empty()) {
        throw ConfigError("mean: empty sample set");
    }
    double acc = 0.0;
    for (SimTime s : samples) {
        acc += static_cast<double>(s);
    }
    return acc / static_cast<double>(samples.size());
}

double variance(std::span<const SimTime> samples) {
    const double m = mean(samples);
    double acc = 0.0;
    for (SimTime s : samples) {
        const double d = static_cast<double>(s) - m;
        acc += d * d;
    }
    return acc / static_cast<double>(samples.size());
}

SimTime percentile(std::span<const SimTime> samples, double p) {
    if (samples.empty()) {
        throw ConfigError("percentile: empty sample set");
    }
    if (p < 0.0 || p > 100.0) {
        throw ConfigError("percentile: p out of [0, 100]");
    }
    std::vector<SimTime> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(sorted.size())));
    if (rank == 0) {
        rank = 1;
    }
    return sorted[rank - 1];
}

} // namespace hubsim
