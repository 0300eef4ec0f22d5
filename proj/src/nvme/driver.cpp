#include "hubsim/nvme/driver.hpp"

#include "hubsim/sim/error.hpp"

namespace hubsim::nvme {

namespace {
constexpr fabric::Device kCpuDev{fabric::DeviceKind::Cpu, 0};
constexpr fabric::Device kFpgaDev{fabric::DeviceKind::Fpga, 0};
} // namespace

// ---------------------------------------------------------------------------
// CpuControlPlane

CpuControlPlane::CpuControlPlane(Engine& engine, fabric::Fabric& fab, devices::CpuModel& cpu,
                                 Params params)
    : engine_(engine),
      fabric_(fab),
      cpu_(cpu),
      params_(std::move(params)),
      component_(engine.add_component("nvme_cpu_driver")) {}

QueuePair* CpuControlPlane::add_queue_pair(Ssd& ssd, std::uint32_t core) {
    if (core >= cpu_.num_cores()) {
        throw ConfigError("nvme: polling core out of range");
    }
    auto qp = std::make_unique<QueuePair>(static_cast<std::uint32_t>(qpairs_.size()),
                                          params_.queue_depth, QueueLocation::CpuMemory);
    QueuePair* raw = qp.get();
    qpairs_.push_back(std::move(qp));

    Binding b;
    b.qp = raw;
    b.ssd = &ssd;
    b.core = core;
    b.sq_doorbell = next_doorbell_addr_;
    b.cq_doorbell = next_doorbell_addr_ + 8;
    next_doorbell_addr_ += 16;
    b.cid_opcode.resize(params_.queue_depth);
    fabric_.define_register(b.sq_doorbell);
    fabric_.define_register(b.cq_doorbell);
    Ssd* ssd_ptr = &ssd;
    fabric_.set_doorbell(b.sq_doorbell,
                         [ssd_ptr, raw](std::uint64_t) { ssd_ptr->on_doorbell(raw); });
    ssd.attach(raw);
    bindings_.push_back(std::move(b));
    return raw;
}

void CpuControlPlane::start(RetireFn on_retire) {
    on_retire_ = std::move(on_retire);
    polling_cores_.clear();
    for (const Binding& b : bindings_) {
        bool seen = false;
        for (std::uint32_t c : polling_cores_) {
            seen = seen || c == b.core;
        }
        if (!seen) {
            polling_cores_.push_back(b.core);
        }
    }
    scan_cursor_.assign(cpu_.num_cores(), 0);
    for (std::uint32_t core : polling_cores_) {
        engine_.schedule(0, component_, "nvme_poll", [this, core] { poll_body(core); });
    }
}

CpuControlPlane::Binding* CpuControlPlane::find_binding(QueuePair* qp) {
    for (Binding& b : bindings_) {
        if (b.qp == qp) {
            return &b;
        }
    }
    return nullptr;
}

SubmitResult CpuControlPlane::submit(QueuePair* qp, NvmeCommand cmd) {
    Binding* b = find_binding(qp);
    if (b == nullptr) {
        throw ConfigError("nvme: submit to a queue pair this driver does not own");
    }
    b->ssd->validate(*qp, cmd);
    if (qp->sq.full()) {
        return SubmitResult::QueueFull;
    }
    qp->sq.push(cmd);
    qp->cid_in_flight[cmd.cid] = true;
    b->cid_opcode[cmd.cid % params_.queue_depth] = cmd.opcode;
    if (observer_) {
        observer_({NvmeEventKind::Submitted, b->ssd->index(), qp->qid, cmd.cid, engine_.now()});
    }
    fabric_.mmio_write(kCpuDev, {fabric::DeviceKind::Ssd, b->ssd->index()}, b->sq_doorbell,
                       qp->sq.occupancy(), params_.doorbell_route);
    return SubmitResult::Accepted;
}

void CpuControlPlane::poll_body(std::uint32_t core) {
    // One scan over this core's queue pairs, starting from a round-robin
    // cursor. Found completion: charge per-command cost, retire, rescan at
    // the core's next free instant. Nothing found: charge the empty-poll
    // cost and sleep for the poll interval.
    std::size_t owned = 0;
    for (const Binding& b : bindings_) {
        owned += b.core == core ? 1 : 0;
    }
    if (owned == 0) {
        return;
    }

    Binding* hit = nullptr;
    std::size_t seen = 0;
    for (std::size_t i = 0; i < bindings_.size() && hit == nullptr; ++i) {
        Binding& b = bindings_[(scan_cursor_[core] + i) % bindings_.size()];
        if (b.core != core) {
            continue;
        }
        ++seen;
        if (!b.qp->cq.empty()) {
            hit = &b;
            scan_cursor_[core] = (scan_cursor_[core] + i + 1) % bindings_.size();
        }
        if (seen == owned) {
            break;
        }
    }

    if (hit == nullptr) {
        cpu_.core_execute(core, params_.empty_poll_cost_ns, "nvme_empty_poll", [this, core] {
            engine_.schedule(params_.poll_interval_ns, component_, "nvme_poll",
                             [this, core] { poll_body(core); });
        });
        return;
    }

    const Completion cpl = hit->qp->cq.pop();
    const Opcode op = hit->cid_opcode[cpl.cid % params_.queue_depth];
    const SimTime cost =
        op == Opcode::Read ? params_.per_cmd_cost_read_ns : params_.per_cmd_cost_write_ns;
    QueuePair* qp = hit->qp;
    Ssd* ssd = hit->ssd;
    const fabric::MmioAddr cq_db = hit->cq_doorbell;
    cpu_.core_execute(core, cost, "nvme_retire", [this, core, qp, ssd, cpl, op, cq_db] {
        qp->cid_in_flight[cpl.cid] = false;
        ++retired_;
        if (observer_) {
            observer_({NvmeEventKind::Retired, ssd->index(), qp->qid, cpl.cid, engine_.now()});
        }
        fabric_.mmio_write(kCpuDev, {fabric::DeviceKind::Ssd, ssd->index()}, cq_db, 0,
                           params_.doorbell_route);
        if (on_retire_) {
            on_retire_(ssd->index(), qp, cpl.cid, op);
        }
        poll_body(core);
    });
}

// ---------------------------------------------------------------------------
// FpgaControlPlane

FpgaControlPlane::FpgaControlPlane(Engine& engine, fabric::Fabric& fab, Params params)
    : engine_(engine),
      fabric_(fab),
      params_(std::move(params)),
      component_(engine.add_component("nvme_fpga_driver")) {}

QueuePair* FpgaControlPlane::add_queue_pair(Ssd& ssd) {
    auto qp = std::make_unique<QueuePair>(static_cast<std::uint32_t>(qpairs_.size()),
                                          params_.queue_depth, QueueLocation::FpgaOnChip);
    QueuePair* raw = qp.get();
    qpairs_.push_back(std::move(qp));

    Binding b;
    b.qp = raw;
    b.ssd = &ssd;
    b.sq_doorbell = next_doorbell_addr_;
    next_doorbell_addr_ += 16;
    b.cid_opcode.resize(params_.queue_depth);
    fabric_.define_register(b.sq_doorbell);
    Ssd* ssd_ptr = &ssd;
    fabric_.set_doorbell(b.sq_doorbell,
                         [ssd_ptr, raw](std::uint64_t) { ssd_ptr->on_doorbell(raw); });
    ssd.attach(raw);

    // The user logic captures CQ arrivals natively; retirement fires one
    // pipeline delay after the completion lands on-chip.
    ssd.set_completion_listener([this](QueuePair* qp_in, Completion cpl) {
        Binding* bind = find_binding(qp_in);
        if (bind == nullptr) {
            return;
        }
        engine_.schedule(params_.capture_pipeline_ns, component_, "nvme_capture",
                         [this, bind, cpl] {
                             if (bind->qp->cq.empty()) {
                                 throw ProtocolError("nvme: capture with empty CQ");
                             }
                             bind->qp->cq.pop();
                             bind->qp->cid_in_flight[cpl.cid] = false;
                             ++retired_;
                             const Opcode op =
                                 bind->cid_opcode[cpl.cid % params_.queue_depth];
                             if (observer_) {
                                 observer_({NvmeEventKind::Retired, bind->ssd->index(),
                                            bind->qp->qid, cpl.cid, engine_.now()});
                             }
                             if (on_retire_) {
                                 on_retire_(bind->ssd->index(), bind->qp, cpl.cid, op);
                             }
                         });
    });

    bindings_.push_back(std::move(b));
    return raw;
}

FpgaControlPlane::Binding* FpgaControlPlane::find_binding(QueuePair* qp) {
    for (Binding& b : bindings_) {
        if (b.qp == qp) {
            return &b;
        }
    }
    return nullptr;
}

SubmitResult FpgaControlPlane::submit(QueuePair* qp, NvmeCommand cmd) {
    Binding* b = find_binding(qp);
    if (b == nullptr) {
        throw ConfigError("nvme: submit to a queue pair this driver does not own");
    }
    b->ssd->validate(*qp, cmd);
    if (qp->sq.full()) {
        return SubmitResult::QueueFull;
    }
    qp->sq.push(cmd);
    qp->cid_in_flight[cmd.cid] = true;
    b->cid_opcode[cmd.cid % params_.queue_depth] = cmd.opcode;
    if (observer_) {
        observer_({NvmeEventKind::Submitted, b->ssd->index(), qp->qid, cmd.cid, engine_.now()});
    }
    fabric_.mmio_write(kFpgaDev, {fabric::DeviceKind::Ssd, b->ssd->index()}, b->sq_doorbell,
                       qp->sq.occupancy(), params_.doorbell_route);
    return SubmitResult::Accepted;
}

} // namespace hubsim::nvme
