#pragma once

#include "hubsim/sim/rng.hpp"
#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <vector>

namespace hubsim::fabric {

/// Linear cost model for one PCIe or Ethernet traversal:
/// base latency + payload serialization + optional additive jitter.
struct LinkModel {
    SimTime base_latency_ns = 0;
    std::uint64_t bandwidth_bytes_per_us = 1;
    Distribution jitter = Distribution::constant(0);
    std::uint32_t mtu_bytes = 0; // network links only; unused for PCIe DMA
};

/// serialization time = ceil(bytes * 1000 / bandwidth_bytes_per_us) ns
SimTime serialization_time(const LinkModel& link, std::uint64_t bytes);

/// base + serialization(bytes) + jitter sample
SimTime traversal_time(const LinkModel& link, std::uint64_t bytes, Rng& rng);

using Route = std::vector<LinkModel>;

/// Sum of traversal times over an ordered multi-hop route.
SimTime route_time(const Route& route, std::uint64_t bytes, Rng& rng);

} // namespace hubsim::fabric
