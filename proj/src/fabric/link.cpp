#include "hubsim/fabric/link.hpp"

#include "hubsim/sim/error.hpp"

namespace hubsim::fabric {

SimTime serialization_time(const LinkModel& link, std::uint64_t bytes) {
    if (link.bandwidth_bytes_per_us == 0) {
        throw ConfigError("link bandwidth must be > 0");
    }
    return ceil_div(bytes * 1000, link.bandwidth_bytes_per_us);
}

SimTime traversal_time(const LinkModel& link, std::uint64_t bytes, Rng& rng) {
    return link.base_latency_ns + serialization_time(link, bytes) + link.jitter.sample(rng);
}

SimTime route_time(const Route& route, std::uint64_t bytes, Rng& rng) {
    SimTime total = 0;
    for (const LinkModel& hop : route) {
        total += traversal_time(hop, bytes, rng);
    }
    return total;
}

} // namespace hubsim::fabric
