#pragma once

#include <stdexcept>
#include <string>

namespace qrkit {

/// Caller asked for something the tool cannot do with the given options
/// (missing required path, contradictory flags). Maps to exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data is unreadable, malformed, or inconsistent (bad file format,
/// unknown document id, mismatched query sets). Maps to exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qrkit
