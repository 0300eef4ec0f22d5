#pragma once

#include <cstdint>
#include <limits>

namespace hubsim {

/// Simulated time in integer nanoseconds. All cost-model outputs are exact
/// integers; sub-nanosecond results round up.
using SimTime = std::uint64_t;

inline constexpr SimTime kNoTimeLimit = std::numeric_limits<SimTime>::max();

/// ceil(a / b) for b > 0.
constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return a / b + (a % b != 0 ? 1 : 0);
}

} // namespace hubsim
