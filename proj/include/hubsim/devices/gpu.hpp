#pragma once

#include "hubsim/sim/error.hpp"
#include "hubsim/sim/time.hpp"

#include <cstdint>

namespace hubsim::devices {

/// GPU compute model: a fixed pool of SMs, some of which are reserved by
/// collective kernels while those run on-GPU. GEMM time scales inversely
/// with the SMs left available.
struct GpuModel {
    std::uint32_t total_sms = 132;
    std::uint32_t collective_sms = 20;
    std::uint64_t per_sm_flops_per_ns = 10;
    SimTime kernel_launch_ns = 5000;

    std::uint32_t available_gemm_sms(bool collective_active) const {
        return collective_active ? total_sms - collective_sms : total_sms;
    }

    SimTime gemm_time(std::uint64_t flops, bool collective_active) const {
        if (flops == 0) {
            throw ConfigError("gemm_time: flops must be > 0");
        }
        const std::uint64_t sms = available_gemm_sms(collective_active);
        if (sms == 0 || per_sm_flops_per_ns == 0) {
            throw ConfigError("gemm_time: no compute capacity configured");
        }
        return ceil_div(flops, per_sm_flops_per_ns * sms);
    }
};

} // namespace hubsim::devices
