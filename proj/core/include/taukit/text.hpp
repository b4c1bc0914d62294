#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace taukit {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

// Duration literal: a decimal number with an optional unit suffix
// s (seconds), m (minutes), h (hours), d (days). Bare numbers are
// seconds. Returns the value in seconds, nullopt if unparseable.
std::optional<double> parse_duration(std::string_view text);

struct ParsedTimestamp {
  std::int64_t seconds = 0;  // since the Unix epoch, >= 0
  bool zone_known = true;    // false for ISO-8601 stamps without a zone
};

// Accepts non-negative epoch seconds (fractional part truncated toward
// zero) or an ISO-8601 instant YYYY-MM-DDTHH:MM:SS[.frac][Z|+HH:MM].
// ISO stamps without a zone designator are taken as UTC and flagged.
std::optional<ParsedTimestamp> parse_timestamp(std::string_view text);

}  // namespace taukit
