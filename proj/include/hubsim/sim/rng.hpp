#pragma once

#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <string_view>

namespace hubsim {

/// Deterministic per-component random stream (xoshiro256**).
///
/// The stream state is derived from (global seed, stream name), so the
/// sample sequence of one component never depends on draw order in another.
/// All implementation is self-contained: sequences are stable across
/// platforms and standard library versions.
class Rng {
public:
    Rng(std::uint64_t seed, std::string_view stream_name);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double next_double();

    /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    /// Standard normal via Box-Muller.
    double normal();

private:
    std::uint64_t state_[4];
};

/// Latency/jitter distribution for cost models.
///
/// Supported shapes: constant(c), uniform(lo, hi) inclusive, and lognormal
/// parameterized by the mean of the resulting distribution plus sigma of the
/// underlying normal, truncated at max_ns. Samples are nanoseconds rounded up.
class Distribution {
public:
    enum class Kind { Constant, Uniform, Lognormal };

    static Distribution constant(SimTime value);
    static Distribution uniform(SimTime lo, SimTime hi);
    static Distribution lognormal_mean(double mean_ns, double sigma, SimTime max_ns);

    SimTime sample(Rng& rng) const;

    Kind kind() const noexcept { return kind_; }
    SimTime lo() const noexcept { return lo_; }
    SimTime hi() const noexcept { return hi_; }

    /// True when every sample is the same value (constant, or degenerate uniform).
    bool is_constant() const noexcept {
        return kind_ == Kind::Constant || (kind_ == Kind::Uniform && lo_ == hi_);
    }

private:
    Distribution() = default;

    Kind kind_ = Kind::Constant;
    SimTime lo_ = 0; // constant value / uniform lo
    SimTime hi_ = 0; // uniform hi / lognormal truncation
    double mu_ = 0.0;
    double sigma_ = 0.0;
};

/// 64-bit string hash (FNV-1a), used to derive stream ids from names.
std::uint64_t hash_name(std::string_view name);

/// splitmix64 step, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace hubsim
