#pragma once

#include "hubsim/fabric/link.hpp"
#include "hubsim/sim/engine.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hubsim::fabric {

enum class DeviceKind : std::uint8_t { Cpu, Gpu, Fpga, Ssd, Nic, Switch };

const char* device_kind_name(DeviceKind kind);

/// A PCIe endpoint: device class plus instance index (e.g. Ssd #3).
struct Device {
    DeviceKind kind = DeviceKind::Cpu;
    std::uint32_t index = 0;

    bool operator==(const Device&) const = default;
};

using MmioAddr = std::uint64_t;

/// The PCIe-visible aperture of GPU memory. Peer-to-peer accesses to GPU
/// memory must land inside a mapped range, which must itself lie inside the
/// window.
class GpuBarWindow {
public:
    GpuBarWindow() = default;
    explicit GpuBarWindow(std::uint64_t size_bytes) : size_bytes_(size_bytes) {}

    void map_range(std::uint64_t offset, std::uint64_t length);

    /// True iff [offset, offset+length) lies inside one mapped range and
    /// inside the window.
    bool contains(std::uint64_t offset, std::uint64_t length) const;

    std::uint64_t size_bytes() const noexcept { return size_bytes_; }

private:
    std::uint64_t size_bytes_ = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges_; // (offset, length)
};

/// One bulk DMA movement over an explicit multi-hop route.
struct Transfer {
    Device src;
    std::uint64_t src_addr = 0;
    Device dst;
    std::uint64_t dst_addr = 0;
    std::uint64_t bytes = 0;
    Route route;
};

/// Intra-server PCIe mechanisms shared by every component: MMIO registers
/// with doorbell callbacks, BAR-checked peer-to-peer access, and DMA
/// transfers with byte accounting.
///
/// MMIO writes are posted (initiator continues immediately; the register is
/// updated and the doorbell handler fires after the one-way route latency).
/// Reads are non-posted: the value is captured at the target after one one-way
/// latency and returned after a second.
class Fabric {
public:
    explicit Fabric(Engine& engine)
        : engine_(engine),
          component_(engine.add_component("fabric")),
          rng_(engine.make_rng("fabric")) {}

    // -- registers ---------------------------------------------------------

    void define_register(MmioAddr addr, std::uint64_t reset_value = 0);
    void set_doorbell(MmioAddr addr, std::function<void(std::uint64_t)> handler);

    /// Current register value (test/inspection helper; no cost).
    std::uint64_t peek_register(MmioAddr addr) const;

    // -- GPU BAR windows ---------------------------------------------------

    void set_gpu_bar(std::uint32_t gpu_index, GpuBarWindow window);

    // -- operations --------------------------------------------------------

    /// Posted register write. MMIO payloads are 8 bytes with zero
    /// serialization time; doorbells are latency-dominated.
    void mmio_write(Device initiator, Device target, MmioAddr addr, std::uint64_t value,
                    const Route& route);

    /// Non-posted register read; `done(value, completion_time)` fires after
    /// the round trip.
    void mmio_read(Device initiator, Device target, MmioAddr addr, const Route& route,
                   std::function<void(std::uint64_t, SimTime)> done);

    using DmaId = std::uint64_t;

    /// Bulk transfer; completion fires after the summed route traversal.
    /// Rejects zero-byte transfers and BAR violations.
    DmaId dma_transfer(const Transfer& t, std::function<void(DmaId)> done);

    // -- accounting --------------------------------------------------------

    std::uint64_t bytes_moved() const noexcept { return bytes_moved_; }
    std::uint64_t bytes_moved(DeviceKind src, DeviceKind dst) const;

private:
    void check_bar(const Device& dev, std::uint64_t addr, std::uint64_t bytes) const;

    Engine& engine_;
    ComponentId component_;
    Rng rng_;

    std::map<MmioAddr, std::uint64_t> registers_;
    std::map<MmioAddr, std::function<void(std::uint64_t)>> doorbells_;
    std::map<std::uint32_t, GpuBarWindow> gpu_bars_;

    std::uint64_t bytes_moved_ = 0;
    std::map<std::pair<std::uint8_t, std::uint8_t>, std::uint64_t> bytes_by_pair_;
    DmaId next_dma_id_ = 1;
};

} // namespace hubsim::fabric
