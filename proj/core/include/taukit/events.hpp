#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace taukit {

// Mean Gregorian month (Julian year / 12), used for span reporting.
inline constexpr double kSecondsPerMonth = 2629746.0;

struct RawEventRecord {
  std::string user_id;        // non-empty, free of , \t \r \n
  std::int64_t timestamp = 0; // seconds since the Unix epoch, >= 0
  std::size_t source_line = 0;
};

// One user's event history. Timestamps are strictly increasing once a
// dedup policy has been applied; duplicate_count records how many input
// events collided at 1-second resolution.
struct EventStream {
  std::string user_id;
  std::vector<std::int64_t> timestamps;
  std::size_t duplicate_count = 0;
};

struct StreamSummary {
  std::string user_id;
  std::size_t message_count = 0;  // original records, before dedup
  double span_months = 0;
  std::int64_t first_ts = 0;
  std::int64_t last_ts = 0;
};

enum class InputFormat { csv, jsonl };
enum class ParseMode { strict, lenient };

// merge: events sharing a timestamp collapse to one.
// keep_with_epsilon: each colliding event advances to the next free
// second, preserving the event count.
enum class DedupPolicy { merge, keep_with_epsilon };

struct SkippedLine {
  std::size_t line = 0;
  std::string reason;
};

struct ParseResult {
  std::vector<RawEventRecord> records;
  std::vector<SkippedLine> skipped;       // lenient mode only
  std::size_t naive_timestamp_count = 0;  // ISO stamps lacking a zone
};

// Input formats:
//   csv    header line `user_id,timestamp`, one record per line
//   jsonl  one object per line with keys "user" and "ts"
// Timestamps may be epoch seconds or ISO-8601 instants; blank lines and
// lines starting with '#' are ignored. Strict mode throws ParseError on
// the first malformed line; lenient mode records it and moves on.
ParseResult parse_events(std::istream& in, InputFormat format, ParseMode mode);

// Same, reading from a file path. Throws IoError if unreadable.
ParseResult parse_events_file(const std::string& path, InputFormat format,
                              ParseMode mode);

// Groups records by user and sorts each user's timestamps ascending,
// then applies the dedup policy. Invariant to the input ordering.
std::map<std::string, EventStream> build_streams(
    std::vector<RawEventRecord> records, DedupPolicy policy);

// Records the stream held before dedup was applied.
std::size_t original_count(const EventStream& stream, DedupPolicy policy);

// Throws EmptyStream on a stream with no events.
StreamSummary summarize(const EventStream& stream, std::size_t original_count);

// Canonical CSV serialization (header + one record per event, users in
// map order). Reparsing the output under `merge` reproduces the same
// user/timestamp content; duplicate_count is not serialized.
void write_csv(const std::map<std::string, EventStream>& streams,
               std::ostream& out);
void write_csv(const EventStream& stream, std::ostream& out);

}  // namespace taukit
