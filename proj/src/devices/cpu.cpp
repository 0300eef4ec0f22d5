#include "hubsim/devices/cpu.hpp"

#include "hubsim/sim/error.hpp"

#include <algorithm>

namespace hubsim::devices {

CpuModel::Core& CpuModel::at(std::uint32_t core) {
    if (core >= cores_.size()) {
        throw ConfigError("invalid core id " + std::to_string(core));
    }
    return cores_[core];
}

const CpuModel::Core& CpuModel::at(std::uint32_t core) const {
    if (core >= cores_.size()) {
        throw ConfigError("invalid core id " + std::to_string(core));
    }
    return cores_[core];
}

void CpuModel::core_execute(std::uint32_t core, SimTime duration, const char* kind,
                            std::function<void()> done) {
    if (duration == 0) {
        throw ConfigError("core_execute: duration must be > 0");
    }
    Core& c = at(core);
    const SimTime start = std::max(engine_.now(), c.free_at);
    const SimTime finish = start + duration;
    c.free_at = finish;
    c.busy_ns += duration;
    engine_.schedule(finish - engine_.now(), component_, kind,
                     [done = std::move(done)] {
                         if (done) {
                             done();
                         }
                     });
}

SimTime CpuModel::core_free_at(std::uint32_t core) const { return at(core).free_at; }

SimTime CpuModel::busy_ns(std::uint32_t core) const { return at(core).busy_ns; }

SimTime CpuModel::total_busy_ns() const {
    SimTime total = 0;
    for (const Core& c : cores_) {
        total += c.busy_ns;
    }
    return total;
}

double CpuModel::utilization(SimTime window_start_busy_ns, SimTime window_ns,
                             std::uint32_t cores_used) const {
    if (window_ns == 0) {
        return 0.0;
    }
    const std::uint32_t n = cores_used == 0 ? num_cores() : cores_used;
    const SimTime busy = total_busy_ns() - window_start_busy_ns;
    return static_cast<double>(busy) / (static_cast<double>(window_ns) * n);
}

} // namespace hubsim::devices
