#include "hubsim/devices/compress.hpp"

#include "hubsim/sim/error.hpp"

#include <cmath>

namespace hubsim::devices {

SimTime CompressionEngine::cpu_duration_ns(std::uint64_t bytes) const {
    // gbps == bits per nanosecond
    const double ns = static_cast<double>(bytes) * 8.0 / params_.cpu_gbps_per_core;
    return static_cast<SimTime>(std::ceil(ns));
}

SimTime CompressionEngine::fpga_latency_ns(std::uint64_t bytes) const {
    const double ns = static_cast<double>(bytes) * 8.0 / params_.fpga_line_gbps;
    return params_.fpga_pipeline_ns + static_cast<SimTime>(std::ceil(ns));
}

std::uint64_t CompressionEngine::output_bytes(std::uint64_t bytes) const {
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(bytes) * params_.ratio));
}

void CompressionEngine::compress(std::uint64_t bytes, std::uint32_t core,
                                 std::function<void(std::uint64_t)> done) {
    if (bytes == 0) {
        throw ConfigError("compress: bytes must be > 0");
    }
    const std::uint64_t out = output_bytes(bytes);
    if (params_.placement == ComputePlacement::Cpu) {
        cpu_.core_execute(core, cpu_duration_ns(bytes), "compress",
                          [out, done = std::move(done)] { done(out); });
    } else {
        engine_.schedule(fpga_latency_ns(bytes), component_, "compress",
                         [out, done = std::move(done)] { done(out); });
    }
}

} // namespace hubsim::devices
