#pragma once

#include "hubsim/fabric/fabric.hpp"
#include "hubsim/nvme/queue.hpp"
#include "hubsim/sim/engine.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hubsim::nvme {

struct SsdConfig {
    std::uint64_t capacity_blocks = 268435456; // 1 TiB of 4 KiB blocks
    std::uint32_t max_inflight = 128;
    Distribution op_latency = Distribution::lognormal_mean(80000.0, 0.25, 400000);
    std::uint64_t read_iops = 700000;
    std::uint64_t write_iops = 170000;
    SimTime fetch_latency_ns = 1000; // doorbell -> command fetched (incl. SQ entry read)
};

/// Observation points on the command lifecycle (tests subscribe to audit the
/// protocol; null by default).
enum class NvmeEventKind : std::uint8_t {
    Submitted,
    Doorbell,
    Fetched,
    DataMoved,
    CqWritten,
    Retired,
};

struct NvmeEvent {
    NvmeEventKind kind;
    std::uint32_t ssd_index;
    std::uint32_t qid;
    std::uint16_t cid;
    SimTime time;
};

using NvmeObserver = std::function<void(const NvmeEvent&)>;

/// SSD controller: fetches commands from attached submission queues after a
/// doorbell, executes them against the flash model (bounded in-flight slots,
/// sampled op latency, sustained-rate cap per opcode), moves data with its
/// DMA engine, and writes completions back to the queue pair's CQ.
class Ssd {
public:
    Ssd(Engine& engine, fabric::Fabric& fab, std::uint32_t index, SsdConfig config);

    /// Attach a queue pair this controller serves.
    void attach(QueuePair* qp);

    /// DMA route from this SSD to buffers on `kind` devices.
    void set_data_route(fabric::DeviceKind kind, fabric::Route route);

    /// Route for completion writes into the queue pair's CQ location.
    void set_cq_route(QueueLocation loc, fabric::Route route);

    /// Doorbell handler: new submissions are visible on `qp`.
    void on_doorbell(QueuePair* qp);

    /// Invoked when a completion has been written to a CQ (the control-plane
    /// driver turns this into a retirement).
    void set_completion_listener(std::function<void(QueuePair*, Completion)> cb) {
        completion_listener_ = std::move(cb);
    }

    void set_observer(NvmeObserver obs) { observer_ = std::move(obs); }

    const SsdConfig& config() const noexcept { return config_; }
    std::uint32_t index() const noexcept { return index_; }
    std::uint32_t inflight() const noexcept { return inflight_; }
    std::uint64_t completed_ops() const noexcept { return completed_ops_; }
    std::uint64_t bytes_transferred() const noexcept { return bytes_transferred_; }

    /// Validates LBA range and cid-reuse ahead of submission.
    void validate(const QueuePair& qp, const NvmeCommand& cmd) const;

private:
    void pump();
    void begin_command(QueuePair* qp, const NvmeCommand& cmd);
    void finish_command(QueuePair* qp, const NvmeCommand& cmd);
    SimTime rate_step(Opcode op) const;

    Engine& engine_;
    fabric::Fabric& fabric_;
    std::uint32_t index_;
    SsdConfig config_;
    ComponentId component_;
    Rng rng_;

    std::vector<QueuePair*> qpairs_;
    std::map<std::uint8_t, fabric::Route> data_routes_;
    fabric::Route cq_route_host_;
    fabric::Route cq_route_fpga_;

    std::uint32_t inflight_ = 0;
    bool fetch_in_progress_ = false;
    std::size_t fetch_rr_ = 0; // round-robin cursor over qpairs
    SimTime fetch_cursor_ = 0;
    SimTime rate_cursor_read_ = 0;
    SimTime rate_cursor_write_ = 0;

    std::uint64_t completed_ops_ = 0;
    std::uint64_t bytes_transferred_ = 0;

    std::function<void(QueuePair*, Completion)> completion_listener_;
    NvmeObserver observer_;
};

} // namespace hubsim::nvme
