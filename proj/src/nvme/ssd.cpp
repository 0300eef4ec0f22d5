#include "hubsim/nvme/ssd.hpp"

#include "hubsim/sim/error.hpp"

#include <algorithm>

namespace hubsim::nvme {

Ssd::Ssd(Engine& engine, fabric::Fabric& fab, std::uint32_t index, SsdConfig config)
    : engine_(engine),
      fabric_(fab),
      index_(index),
      config_(config),
      component_(engine.add_component("ssd" + std::to_string(index))),
      rng_(engine.make_rng("nvme.ssd" + std::to_string(index))) {}

void Ssd::attach(QueuePair* qp) { qpairs_.push_back(qp); }

void Ssd::set_data_route(fabric::DeviceKind kind, fabric::Route route) {
    data_routes_[static_cast<std::uint8_t>(kind)] = std::move(route);
}

void Ssd::set_cq_route(QueueLocation loc, fabric::Route route) {
    if (loc == QueueLocation::CpuMemory) {
        cq_route_host_ = std::move(route);
    } else {
        cq_route_fpga_ = std::move(route);
    }
}

void Ssd::validate(const QueuePair& qp, const NvmeCommand& cmd) const {
    if (cmd.nblocks == 0) {
        throw ConfigError("nvme: nblocks must be >= 1");
    }
    if (cmd.slba > config_.capacity_blocks ||
        cmd.nblocks > config_.capacity_blocks - cmd.slba) {
        throw ConfigError("nvme: LBA range exceeds SSD capacity");
    }
    if (qp.cid_in_flight[cmd.cid]) {
        throw ProtocolError("nvme: cid reused while in flight");
    }
}

SimTime Ssd::rate_step(Opcode op) const {
    const std::uint64_t iops = op == Opcode::Read ? config_.read_iops : config_.write_iops;
    if (iops == 0) {
        throw ConfigError("nvme: iops capacity must be > 0");
    }
    return ceil_div(1000000000ull, iops);
}

void Ssd::on_doorbell(QueuePair* qp) {
    if (observer_ && !qp->sq.empty()) {
        observer_({NvmeEventKind::Doorbell, index_, qp->qid, qp->sq.front().cid, engine_.now()});
    }
    pump();
}

void Ssd::pump() {
    if (fetch_in_progress_ || inflight_ >= config_.max_inflight) {
        return;
    }
    // Round-robin across attached queue pairs for the next non-empty SQ.
    QueuePair* next = nullptr;
    for (std::size_t i = 0; i < qpairs_.size(); ++i) {
        QueuePair* qp = qpairs_[(fetch_rr_ + i) % qpairs_.size()];
        if (!qp->sq.empty()) {
            next = qp;
            fetch_rr_ = (fetch_rr_ + i + 1) % qpairs_.size();
            break;
        }
    }
    if (next == nullptr) {
        return;
    }
    // Fetches are serialized on the controller.
    fetch_in_progress_ = true;
    fetch_cursor_ = std::max(fetch_cursor_, engine_.now()) + config_.fetch_latency_ns;
    engine_.schedule(fetch_cursor_ - engine_.now(), component_, "nvme_fetch", [this, next] {
        fetch_in_progress_ = false;
        if (next->sq.empty()) {
            pump();
            return;
        }
        const NvmeCommand cmd = next->sq.pop();
        if (observer_) {
            observer_({NvmeEventKind::Fetched, index_, next->qid, cmd.cid, engine_.now()});
        }
        begin_command(next, cmd);
        pump();
    });
}

void Ssd::begin_command(QueuePair* qp, const NvmeCommand& cmd) {
    ++inflight_;
    // Raw service completion, then spaced so the sustained per-opcode
    // completion rate never exceeds the configured capacity.
    const SimTime raw_done = engine_.now() + config_.op_latency.sample(rng_);
    SimTime& cursor = cmd.opcode == Opcode::Read ? rate_cursor_read_ : rate_cursor_write_;
    cursor = std::max(cursor + rate_step(cmd.opcode), raw_done);
    const SimTime done = cursor;
    engine_.schedule(done - engine_.now(), component_, "nvme_op_done",
                     [this, qp, cmd] { finish_command(qp, cmd); });
}

void Ssd::finish_command(QueuePair* qp, const NvmeCommand& cmd) {
    // Data plane: the SSD's DMA engine moves the payload to/from the buffer.
    auto route_it = data_routes_.find(static_cast<std::uint8_t>(cmd.buffer.kind));
    if (route_it == data_routes_.end()) {
        throw ConfigError("nvme: no DMA route configured for buffer device");
    }
    const std::uint64_t bytes = static_cast<std::uint64_t>(cmd.nblocks) * kBlockBytes;

    fabric::Transfer t;
    if (cmd.opcode == Opcode::Read) {
        t.src = {fabric::DeviceKind::Ssd, index_};
        t.dst = cmd.buffer;
        t.dst_addr = cmd.buffer_addr;
    } else {
        t.src = cmd.buffer;
        t.src_addr = cmd.buffer_addr;
        t.dst = {fabric::DeviceKind::Ssd, index_};
    }
    t.bytes = bytes;
    t.route = route_it->second;

    fabric_.dma_transfer(t, [this, qp, cmd, bytes](fabric::Fabric::DmaId) {
        bytes_transferred_ += bytes;
        if (observer_) {
            observer_({NvmeEventKind::DataMoved, index_, qp->qid, cmd.cid, engine_.now()});
        }
        // Completion write into the CQ (one fabric write to the CQ location),
        // then the in-flight slot frees and fetching can continue.
        const fabric::Route& cq_route =
            qp->location == QueueLocation::CpuMemory ? cq_route_host_ : cq_route_fpga_;
        Rng& rng = rng_;
        SimTime delay = cq_route.empty() ? 0 : fabric::route_time(cq_route, 0, rng);
        engine_.schedule(delay, component_, "nvme_cq_write", [this, qp, cmd] {
            if (!qp->cq.push({cmd.cid, 0})) {
                throw ProtocolError("nvme: completion queue overflow");
            }
            if (observer_) {
                observer_({NvmeEventKind::CqWritten, index_, qp->qid, cmd.cid, engine_.now()});
            }
            --inflight_;
            ++completed_ops_;
            if (completion_listener_) {
                completion_listener_(qp, {cmd.cid, 0});
            }
            pump();
        });
    });
}

} // namespace hubsim::nvme
