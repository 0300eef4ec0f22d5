#pragma once

#include "hubsim/sim/time.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hubsim {

/// Labeled measurement sink for a scenario run: latency samples per label
/// plus named counters. Ordered containers keep output deterministic.
class Metrics {
public:
    void add_sample(const std::string& label, SimTime ns) { samples_[label].push_back(ns); }

    std::uint64_t& counter(const std::string& name) { return counters_[name]; }

    std::uint64_t counter_value(const std::string& name) const {
        auto it = counters_.find(name);
        return it == counters_.end() ? 0 : it->second;
    }

    const std::vector<SimTime>& samples(const std::string& label) const {
        static const std::vector<SimTime> empty;
        auto it = samples_.find(label);
        return it == samples_.end() ? empty : it->second;
    }

    const std::map<std::string, std::vector<SimTime>>& all_samples() const { return samples_; }
    const std::map<std::string, std::uint64_t>& all_counters() const { return counters_; }

private:
    std::map<std::string, std::vector<SimTime>> samples_;
    std::map<std::string, std::uint64_t> counters_;
};

} // namespace hubsim
