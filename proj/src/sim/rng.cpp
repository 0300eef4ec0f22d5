#include "hubsim/sim/rng.hpp"

#include "hubsim/sim/error.hpp"

#include <cmath>

namespace hubsim {

std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}

Rng::Rng(std::uint64_t seed, std::string_view stream_name) {
    std::uint64_t sm = seed ^ hash_name(stream_name);
    for (auto& s : state_) {
        s = splitmix64(sm);
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::next_double() {
    // 53 mantissa bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) {
        throw ConfigError("uniform: lo > hi");
    }
    const std::uint64_t range = hi - lo;
    if (range == std::numeric_limits<std::uint64_t>::max()) {
        return next_u64();
    }
    // Lemire multiply-shift reduction over the inclusive range.
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(range + 1);
    return lo + static_cast<std::uint64_t>(prod >> 64);
}

double Rng::normal() {
    // Box-Muller; u1 kept away from 0 so log() is finite.
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) {
        u1 = 0x1.0p-53;
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

Distribution Distribution::constant(SimTime value) {
    Distribution d;
    d.kind_ = Kind::Constant;
    d.lo_ = value;
    return d;
}

Distribution Distribution::uniform(SimTime lo, SimTime hi) {
    if (hi < lo) {
        throw ConfigError("distribution uniform: hi < lo");
    }
    Distribution d;
    d.kind_ = Kind::Uniform;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

Distribution Distribution::lognormal_mean(double mean_ns, double sigma, SimTime max_ns) {
    if (sigma < 0.0) {
        throw ConfigError("distribution lognormal: sigma < 0");
    }
    if (mean_ns <= 0.0) {
        throw ConfigError("distribution lognormal: mean <= 0");
    }
    Distribution d;
    d.kind_ = Kind::Lognormal;
    // mean of lognormal = exp(mu + sigma^2/2)
    d.mu_ = std::log(mean_ns) - 0.5 * sigma * sigma;
    d.sigma_ = sigma;
    d.hi_ = max_ns;
    return d;
}

SimTime Distribution::sample(Rng& rng) const {
    switch (kind_) {
    case Kind::Constant:
        return lo_;
    case Kind::Uniform:
        return rng.uniform(lo_, hi_);
    case Kind::Lognormal: {
        const double v = std::exp(mu_ + sigma_ * rng.normal());
        const double up = std::ceil(v);
        if (up >= static_cast<double>(hi_)) {
            return hi_;
        }
        return static_cast<SimTime>(up);
    }
    }
    return 0;
}

} // namespace hubsim
