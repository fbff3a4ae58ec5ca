#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace sck {

/// Closed integer time interval [start, end].
struct Interval {
    std::int64_t start = 0;
    std::int64_t end = 0;

    constexpr bool valid() const { return start <= end; }

    auto operator<=>(const Interval&) const = default;
};

/// inner ≺ outer: inner lies within outer (reflexive).
constexpr bool interval_contains(const Interval& inner, const Interval& outer) {
    return outer.start <= inner.start && inner.end <= outer.end;
}

/// Common subinterval of a and b, if any.
constexpr std::optional<Interval> interval_meet(const Interval& a, const Interval& b) {
    Interval m{std::max(a.start, b.start), std::min(a.end, b.end)};
    if (!m.valid()) return std::nullopt;
    return m;
}

inline std::string to_string(const Interval& t) {
    return "[" + std::to_string(t.start) + "," + std::to_string(t.end) + "]";
}

}  // namespace sck
