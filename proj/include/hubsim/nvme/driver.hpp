#pragma once

#include "hubsim/devices/cpu.hpp"
#include "hubsim/fabric/fabric.hpp"
#include "hubsim/nvme/queue.hpp"
#include "hubsim/nvme/ssd.hpp"
#include "hubsim/sim/engine.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace hubsim::nvme {

enum class SubmitResult : std::uint8_t { Accepted, QueueFull };

/// Retirement callback: (ssd index, qpair, cid, opcode).
using RetireFn = std::function<void(std::uint32_t, QueuePair*, std::uint16_t, Opcode)>;

/// Host-driven control plane: queue pairs live in host memory, submissions
/// ring a doorbell over PCIe, and assigned cores poll the CQs. Polling and
/// per-completion processing are charged to the cores; an empty poll still
/// costs core time.
class CpuControlPlane {
public:
    struct Params {
        std::uint32_t queue_depth = 1024;
        SimTime per_cmd_cost_read_ns = 700;   // submit + poll + retire aggregate
        SimTime per_cmd_cost_write_ns = 2800; // see config docs
        SimTime poll_interval_ns = 2000;
        SimTime empty_poll_cost_ns = 150;
        fabric::Route doorbell_route; // host -> SSD posted write
    };

    CpuControlPlane(Engine& engine, fabric::Fabric& fab, devices::CpuModel& cpu, Params params);

    /// Create one queue pair on `ssd`, polled by `core`.
    QueuePair* add_queue_pair(Ssd& ssd, std::uint32_t core);

    /// Begin the polling loops (one per core that owns at least one qpair).
    void start(RetireFn on_retire);

    /// Write the command into the SQ and ring the SQ doorbell.
    SubmitResult submit(QueuePair* qp, NvmeCommand cmd);

    std::uint64_t retired_ops() const noexcept { return retired_; }

    void set_observer(NvmeObserver obs) { observer_ = std::move(obs); }

private:
    struct Binding {
        QueuePair* qp;
        Ssd* ssd;
        std::uint32_t core;
        fabric::MmioAddr sq_doorbell;
        fabric::MmioAddr cq_doorbell;
        std::vector<Opcode> cid_opcode;
    };

    void poll_body(std::uint32_t core);
    Binding* find_binding(QueuePair* qp);

    Engine& engine_;
    fabric::Fabric& fabric_;
    devices::CpuModel& cpu_;
    Params params_;
    ComponentId component_;

    std::vector<std::unique_ptr<QueuePair>> qpairs_;
    std::vector<Binding> bindings_;
    std::vector<std::uint32_t> polling_cores_;
    std::vector<std::size_t> scan_cursor_; // per polling core, round-robin over bindings
    RetireFn on_retire_;
    std::uint64_t retired_ = 0;
    fabric::MmioAddr next_doorbell_addr_ = 0x10000;
    NvmeObserver observer_;
};

/// On-chip control plane: queue pairs live in FPGA memory, the user logic
/// writes SQ entries at zero cost and captures CQ arrivals natively. No CPU
/// core time is ever charged.
class FpgaControlPlane {
public:
    struct Params {
        std::uint32_t queue_depth = 1024;
        SimTime capture_pipeline_ns = 100; // CQ arrival -> retirement
        fabric::Route doorbell_route;      // FPGA -> SSD peer-to-peer posted write
    };

    FpgaControlPlane(Engine& engine, fabric::Fabric& fab, Params params);

    QueuePair* add_queue_pair(Ssd& ssd);

    void start(RetireFn on_retire) { on_retire_ = std::move(on_retire); }

    SubmitResult submit(QueuePair* qp, NvmeCommand cmd);

    std::uint64_t retired_ops() const noexcept { return retired_; }

    void set_observer(NvmeObserver obs) { observer_ = std::move(obs); }

private:
    struct Binding {
        QueuePair* qp;
        Ssd* ssd;
        fabric::MmioAddr sq_doorbell;
        std::vector<Opcode> cid_opcode;
    };

    Binding* find_binding(QueuePair* qp);

    Engine& engine_;
    fabric::Fabric& fabric_;
    Params params_;
    ComponentId component_;

    std::vector<std::unique_ptr<QueuePair>> qpairs_;
    std::vector<Binding> bindings_;
    RetireFn on_retire_;
    std::uint64_t retired_ = 0;
    fabric::MmioAddr next_doorbell_addr_ = 0x20000;
    NvmeObserver observer_;
};

} // namespace hubsim::nvme
