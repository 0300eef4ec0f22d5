#pragma once

#include "hubsim/fabric/fabric.hpp"
#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <vector>

namespace hubsim::nvme {

inline constexpr std::uint64_t kBlockBytes = 4096;

enum class Opcode : std::uint8_t { Read, Write };

/// One I/O command: direction, logical block address on the SSD, and the
/// PCIe bus address of the data buffer (which may live on any PCIe device).
struct NvmeCommand {
    std::uint16_t cid = 0;
    Opcode opcode = Opcode::Read;
    std::uint64_t slba = 0;
    std::uint32_t nblocks = 1;
    fabric::Device buffer;
    std::uint64_t buffer_addr = 0;
};

struct Completion {
    std::uint16_t cid = 0;
    std::uint16_t status = 0; // 0 == success
};

enum class QueueLocation : std::uint8_t { CpuMemory, FpgaOnChip };

/// Fixed-depth ring with the one-slot-open full convention:
/// occupancy = (tail - head) mod depth <= depth - 1.
template <typename Entry>
class Ring {
public:
    explicit Ring(std::uint32_t depth) : depth_(depth), entries_(depth) {}

    std::uint32_t depth() const noexcept { return depth_; }
    std::uint32_t occupancy() const noexcept { return (tail_ + depth_ - head_) % depth_; }
    bool empty() const noexcept { return head_ == tail_; }
    bool full() const noexcept { return occupancy() == depth_ - 1; }

    /// Returns false when the ring is full.
    bool push(const Entry& e) {
        if (full()) {
            return false;
        }
        entries_[tail_] = e;
        tail_ = (tail_ + 1) % depth_;
        return true;
    }

    /// Requires !empty().
    Entry pop() {
        Entry e = entries_[head_];
        head_ = (head_ + 1) % depth_;
        return e;
    }

    const Entry& front() const { return entries_[head_]; }

private:
    std::uint32_t depth_;
    std::uint32_t head_ = 0;
    std::uint32_t tail_ = 0;
    std::vector<Entry> entries_;
};

using SubmissionQueue = Ring<NvmeCommand>;
using CompletionQueue = Ring<Completion>;

/// A submission/completion queue pair, placed either in host memory
/// (CPU-driven control plane) or in FPGA on-chip memory.
struct QueuePair {
    QueuePair(std::uint32_t id, std::uint32_t depth, QueueLocation loc)
        : qid(id), location(loc), sq(depth), cq(depth) {}

    std::uint32_t qid;
    QueueLocation location;
    SubmissionQueue sq;
    CompletionQueue cq;
    std::vector<bool> cid_in_flight = std::vector<bool>(65536, false);
};

} // namespace hubsim::nvme
