#pragma once

#include <stdexcept>
#include <string>

namespace hubsim {

/// Machine-readable error categories, mapped to CLI exit codes.
enum class ErrorCategory {
    Config,   // bad configuration, unknown keys, invalid parameters
    Protocol, // a component violated a protocol state machine
    Capacity, // a modeled hardware resource budget was exceeded
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}

    ErrorCategory category() const noexcept { return category_; }

    const char* category_name() const noexcept {
        switch (category_) {
        case ErrorCategory::Config: return "config";
        case ErrorCategory::Protocol: return "protocol";
        case ErrorCategory::Capacity: return "capacity";
        }
        return "unknown";
    }

private:
    ErrorCategory category_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorCategory::Config, msg) {}
};

struct ProtocolError : Error {
    explicit ProtocolError(const std::string& msg) : Error(ErrorCategory::Protocol, msg) {}
};

struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(ErrorCategory::Capacity, msg) {}
};

} // namespace hubsim
