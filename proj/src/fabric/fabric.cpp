#include "hubsim/fabric/fabric.hpp"

#include <string>

namespace hubsim::fabric {

namespace {
constexpr std::uint64_t kMmioBytes = 8;
}

const char* device_kind_name(DeviceKind kind) {
    switch (kind) {
    case DeviceKind::Cpu: return "cpu";
    case DeviceKind::Gpu: return "gpu";
    case DeviceKind::Fpga: return "fpga";
    case DeviceKind::Ssd: return "ssd";
    case DeviceKind::Nic: return "nic";
    case DeviceKind::Switch: return "switch";
    }
    return "?";
}

void GpuBarWindow::map_range(std::uint64_t offset, std::uint64_t length) {
    if (length == 0 || offset > size_bytes_ || length > size_bytes_ - offset) {
        throw ConfigError("BAR mapping exceeds the window size");
    }
    ranges_.emplace_back(offset, length);
}

bool GpuBarWindow::contains(std::uint64_t offset, std::uint64_t length) const {
    if (length == 0 || offset > size_bytes_ || length > size_bytes_ - offset) {
        return false;
    }
    for (const auto& [lo, len] : ranges_) {
        if (offset >= lo && offset - lo <= len - 1 && length <= len - (offset - lo)) {
            return true;
        }
    }
    return false;
}

void Fabric::define_register(MmioAddr addr, std::uint64_t reset_value) {
    registers_[addr] = reset_value;
}

void Fabric::set_doorbell(MmioAddr addr, std::function<void(std::uint64_t)> handler) {
    if (registers_.find(addr) == registers_.end()) {
        throw ConfigError("doorbell on an undefined register");
    }
    doorbells_[addr] = std::move(handler);
}

std::uint64_t Fabric::peek_register(MmioAddr addr) const {
    auto it = registers_.find(addr);
    if (it == registers_.end()) {
        throw ProtocolError("mmio: unmapped register address");
    }
    return it->second;
}

void Fabric::set_gpu_bar(std::uint32_t gpu_index, GpuBarWindow window) {
    gpu_bars_[gpu_index] = std::move(window);
}

void Fabric::check_bar(const Device& dev, std::uint64_t addr, std::uint64_t bytes) const {
    if (dev.kind != DeviceKind::Gpu) {
        return;
    }
    auto it = gpu_bars_.find(dev.index);
    if (it == gpu_bars_.end() || !it->second.contains(addr, bytes)) {
        throw ProtocolError("BAR violation: GPU-memory access outside the mapped window (gpu " +
                            std::to_string(dev.index) + ", addr " + std::to_string(addr) +
                            ", bytes " + std::to_string(bytes) + ")");
    }
}

void Fabric::mmio_write(Device initiator, Device target, MmioAddr addr, std::uint64_t value,
                        const Route& route) {
    (void)initiator;
    if (route.empty()) {
        throw ConfigError("mmio_write: empty route");
    }
    if (registers_.find(addr) == registers_.end()) {
        throw ProtocolError("mmio: unmapped register address");
    }
    check_bar(target, addr, kMmioBytes);
    const SimTime one_way = route_time(route, 0, rng_);
    engine_.schedule(one_way, component_, "mmio_write", [this, addr, value] {
        registers_[addr] = value;
        auto it = doorbells_.find(addr);
        if (it != doorbells_.end()) {
            it->second(value);
        }
    });
}

void Fabric::mmio_read(Device initiator, Device target, MmioAddr addr, const Route& route,
                       std::function<void(std::uint64_t, SimTime)> done) {
    (void)initiator;
    if (route.empty()) {
        throw ConfigError("mmio_read: empty route");
    }
    if (registers_.find(addr) == registers_.end()) {
        throw ProtocolError("mmio: unmapped register address");
    }
    check_bar(target, addr, kMmioBytes);
    const SimTime to_target = route_time(route, 0, rng_);
    engine_.schedule(to_target, component_, "mmio_read_req",
                     [this, addr, route, done = std::move(done)] {
                         const std::uint64_t value = registers_[addr];
                         const SimTime back = route_time(route, 0, rng_);
                         engine_.schedule(back, component_, "mmio_read_cpl",
                                          [this, value, done = std::move(done)] {
                                              done(value, engine_.now());
                                          });
                     });
}

Fabric::DmaId Fabric::dma_transfer(const Transfer& t, std::function<void(DmaId)> done) {
    if (t.bytes == 0) {
        throw ConfigError("dma_transfer: zero-byte transfer");
    }
    if (t.route.empty()) {
        throw ConfigError("dma_transfer: empty route");
    }
    check_bar(t.src, t.src_addr, t.bytes);
    check_bar(t.dst, t.dst_addr, t.bytes);

    const DmaId id = next_dma_id_++;
    const SimTime total = route_time(t.route, t.bytes, rng_);
    bytes_moved_ += t.bytes;
    bytes_by_pair_[{static_cast<std::uint8_t>(t.src.kind),
                    static_cast<std::uint8_t>(t.dst.kind)}] += t.bytes;
    engine_.schedule(total, component_, "dma_complete", [id, done = std::move(done)] {
        if (done) {
            done(id);
        }
    });
    return id;
}

std::uint64_t Fabric::bytes_moved(DeviceKind src, DeviceKind dst) const {
    auto it = bytes_by_pair_.find(
        {static_cast<std::uint8_t>(src), static_cast<std::uint8_t>(dst)});
    return it == bytes_by_pair_.end() ? 0 : it->second;
}

} // namespace hubsim::fabric
