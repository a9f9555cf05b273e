#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace promptrend {

// All timestamps are UTC unix seconds (int64).
using UnixSeconds = std::int64_t;

constexpr std::int64_t kSecondsPerDay = 86400;

UnixSeconds now_unix();

// "2025-01-01T00:00:00Z" <-> unix seconds. Parse accepts an optional
// fractional second part (discarded) and requires a trailing 'Z'.
std::string format_iso8601(UnixSeconds ts);
UnixSeconds parse_iso8601(std::string_view text);

}  // namespace promptrend
