#pragma once

#include "hubsim/sim/engine.hpp"
#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hubsim::devices {

/// CPU cores as simulated serial servers: each core executes one work item
/// at a time, FIFO, and accrues busy time for utilization accounting.
/// Cores are accounting resources, not execution threads.
class CpuModel {
public:
    CpuModel(Engine& engine, std::uint32_t num_cores, const std::string& name = "cpu")
        : engine_(engine),
          component_(engine.add_component(name)),
          cores_(num_cores) {}

    std::uint32_t num_cores() const noexcept { return static_cast<std::uint32_t>(cores_.size()); }

    /// Enqueue `duration` ns of work on `core`; `done` fires at
    /// max(now, core_free_time) + duration.
    void core_execute(std::uint32_t core, SimTime duration, const char* kind,
                      std::function<void()> done);

    /// Time at which the core's queue drains (>= now when busy).
    SimTime core_free_at(std::uint32_t core) const;

    /// Cumulative busy nanoseconds charged to the core.
    SimTime busy_ns(std::uint32_t core) const;
    SimTime total_busy_ns() const;

    /// busy / elapsed over a measurement window, averaged across `cores_used`
    /// (pass 0 to average across all cores).
    double utilization(SimTime window_start_busy_ns, SimTime window_ns,
                       std::uint32_t cores_used) const;

private:
    struct Core {
        SimTime free_at = 0;
        SimTime busy_ns = 0;
    };

    Core& at(std::uint32_t core);
    const Core& at(std::uint32_t core) const;

    Engine& engine_;
    ComponentId component_;
    std::vector<Core> cores_;
};

} // namespace hubsim::devices
