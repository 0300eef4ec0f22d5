#pragma once

#include "hubsim/devices/cpu.hpp"
#include "hubsim/sim/engine.hpp"

#include <cstdint>
#include <functional>

namespace hubsim::devices {

enum class ComputePlacement : std::uint8_t { Cpu, Fpga };

/// Compression as a throughput/latency cost, not an executed codec.
/// Output size is input * ratio (a model constant).
///
/// CPU placement runs the whole payload as one work item on an assigned
/// core at gbps_per_core. FPGA placement is a pipelined fixed-function unit:
/// fixed pipeline latency plus line-rate serialization, no core time.
class CompressionEngine {
public:
    struct Params {
        ComputePlacement placement = ComputePlacement::Cpu;
        double ratio = 0.5;
        double cpu_gbps_per_core = 1.6;
        double fpga_line_gbps = 100.0;
        SimTime fpga_pipeline_ns = 5000;
    };

    CompressionEngine(Engine& engine, CpuModel& cpu, Params params)
        : engine_(engine),
          cpu_(cpu),
          params_(params),
          component_(engine.add_component("compress")) {}

    /// Duration of the CPU work item for `bytes` on one core.
    SimTime cpu_duration_ns(std::uint64_t bytes) const;

    /// Latency through the FPGA unit for `bytes`.
    SimTime fpga_latency_ns(std::uint64_t bytes) const;

    std::uint64_t output_bytes(std::uint64_t bytes) const;

    /// Compress `bytes`; `done(output_bytes)` fires on completion. For CPU
    /// placement the payload occupies `core`; FPGA placement charges no core.
    void compress(std::uint64_t bytes, std::uint32_t core,
                  std::function<void(std::uint64_t)> done);

    const Params& params() const noexcept { return params_; }

private:
    Engine& engine_;
    CpuModel& cpu_;
    Params params_;
    ComponentId component_;
};

} // namespace hubsim::devices
