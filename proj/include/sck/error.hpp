#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sck {

enum class ErrorKind {
    SortConflict,
    SortViolation,
    UnknownEntity,
    ResourceLimit,
    NotPresent,
    UnknownTarget,
    UnboundIntervalVariable,
    InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

// Single exception type for library failures; `kind()` lets callers map
// failures to exit codes or diagnostics without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sck
