#pragma once

#include "hubsim/sim/error.hpp"
#include "hubsim/sim/rng.hpp"
#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace hubsim {

using ComponentId = std::uint32_t;

/// Handle for a scheduled event, usable for cancellation.
struct EventId {
    SimTime fire_time = 0;
    std::uint64_t seq = 0;
};

/// Deterministic single-threaded discrete-event engine.
///
/// Events are dispatched in strict (fire_time, seq) order where seq is the
/// insertion counter, so two events scheduled for the same instant are
/// delivered FIFO. The clock only advances at dispatch boundaries; handlers
/// observe a frozen now(). One engine instance per simulation run; runs are
/// byte-identical given the same (configuration, seed).
class Engine {
public:
    explicit Engine(std::uint64_t seed) : seed_(seed) {}

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    /// Register a named component. The name appears in the event trace.
    ComponentId add_component(std::string name) {
        components_.push_back(std::move(name));
        return static_cast<ComponentId>(components_.size() - 1);
    }

    SimTime now() const noexcept { return now_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Derive the deterministic random stream for a named component.
    Rng make_rng(std::string_view stream_name) const { return Rng(seed_, stream_name); }

    /// Schedule `action` to run `delay` ns from now, attributed to `target`.
    /// `kind` must point to a string with static storage duration.
    EventId schedule(SimTime delay, ComponentId target, const char* kind,
                     std::function<void()> action) {
        if (target >= components_.size()) {
            throw ConfigError("schedule: unknown target component");
        }
        if (delay > kNoTimeLimit - now_) {
            throw ConfigError("schedule: delay overflows the simulated clock");
        }
        const EventId id{now_ + delay, next_seq_++};
        queue_.emplace(Key{id.fire_time, id.seq}, Record{target, kind, std::move(action)});
        return id;
    }

    /// Cancel a pending event. Cancelling an already-dispatched or already-
    /// cancelled event is a no-op.
    void cancel(const EventId& id) { queue_.erase(Key{id.fire_time, id.seq}); }

    /// Dispatch events in (fire_time, seq) order until the queue is empty or
    /// the next event would fire past `limit`. Returns the number dispatched.
    /// With an empty queue the clock is left unchanged.
    std::uint64_t run_to_completion(SimTime limit = kNoTimeLimit) {
        std::uint64_t dispatched = 0;
        while (!queue_.empty()) {
            auto it = queue_.begin();
            const Key key = it->first;
            if (key.fire_time > limit) {
                now_ = limit;
                return dispatched;
            }
            if (key.fire_time < now_) {
                throw ProtocolError("event scheduled into the past");
            }
            Record rec = std::move(it->second);
            queue_.erase(it);
            now_ = key.fire_time;
            if (trace_) {
                (*trace_) << key.fire_time << '\t' << key.seq << '\t'
                          << components_[rec.target] << '\t' << rec.kind << '\n';
            }
            rec.action();
            ++dispatched;
        }
        return dispatched;
    }

    bool queue_empty() const noexcept { return queue_.empty(); }

    /// Optional event-trace sink: one line per dispatched event,
    /// `time_ns<TAB>seq<TAB>component<TAB>kind`.
    void set_trace(std::ostream* sink) noexcept { trace_ = sink; }

private:
    struct Key {
        SimTime fire_time;
        std::uint64_t seq;
        bool operator<(const Key& o) const noexcept {
            return fire_time != o.fire_time ? fire_time < o.fire_time : seq < o.seq;
        }
    };
    struct Record {
        ComponentId target;
        const char* kind;
        std::function<void()> action;
    };

    std::uint64_t seed_;
    SimTime now_ = 0;
    std::uint64_t next_seq_ = 0;
    std::map<Key, Record> queue_;
    std::vector<std::string> components_;
    std::ostream* trace_ = nullptr;
};

} // namespace hubsim
