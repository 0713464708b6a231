#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phi {

// Thrown when an operation would exceed its configured size guard. The
// exponential evaluators refuse oversized inputs instead of running for hours.
struct GuardError : std::runtime_error {
    std::string op;
    std::uint64_t limit;
    std::uint64_t actual;

    GuardError(std::string op_, std::uint64_t limit_, std::uint64_t actual_)
        : std::runtime_error(op_ + ": size guard exceeded (limit " + std::to_string(limit_) +
                             ", got " + std::to_string(actual_) + ")"),
          op(std::move(op_)), limit(limit_), actual(actual_) {}
};

// Malformed external input (graph6 strings, chord words, ...).
struct FormatError : std::invalid_argument {
    explicit FormatError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace phi
