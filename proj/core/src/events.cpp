#include "taukit/events.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "taukit/errors.hpp"
#include "taukit/text.hpp"

namespace taukit {

namespace {

constexpr std::string_view kCsvHeader = "user_id,timestamp";

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool valid_user_id(std::string_view user) {
  if (user.empty()) return false;
  return user.find_first_of(",\t\r\n") == std::string_view::npos;
}

struct LineOutcome {
  bool ok = false;
  RawEventRecord record;
  std::string reason;
  bool naive_zone = false;
};

LineOutcome parse_csv_line(std::string_view line, std::size_t lineno) {
  LineOutcome out;
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) {
    out.reason = "expected 'user_id,timestamp'";
    return out;
  }
  const std::string_view user = line.substr(0, comma);
  const std::string_view ts_text = line.substr(comma + 1);
  if (!valid_user_id(user)) {
    out.reason = "invalid user id";
    return out;
  }
  const auto ts = parse_timestamp(ts_text);
  if (!ts) {
    out.reason = "invalid timestamp";
    return out;
  }
  out.ok = true;
  out.naive_zone = !ts->zone_known;
  out.record = RawEventRecord{std::string(user), ts->seconds, lineno};
  return out;
}

LineOutcome parse_jsonl_line(const std::string& line, std::size_t lineno) {
  LineOutcome out;
  const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    out.reason = "invalid JSON object";
    return out;
  }
  const auto user_it = j.find("user");
  if (user_it == j.end() || !user_it->is_string()) {
    out.reason = "missing string key 'user'";
    return out;
  }
  const auto user = user_it->get<std::string>();
  if (!valid_user_id(user)) {
    out.reason = "invalid user id";
    return out;
  }
  const auto ts_it = j.find("ts");
  if (ts_it == j.end()) {
    out.reason = "missing key 'ts'";
    return out;
  }
  std::int64_t seconds = 0;
  bool naive = false;
  if (ts_it->is_number_unsigned() || ts_it->is_number_integer()) {
    const auto v = ts_it->get<std::int64_t>();
    if (v < 0) {
      out.reason = "invalid timestamp";
      return out;
    }
    seconds = v;
  } else if (ts_it->is_number_float()) {
    const double v = ts_it->get<double>();
    if (!(v >= 0) || v >= 9.2e18) {
      out.reason = "invalid timestamp";
      return out;
    }
    seconds = static_cast<std::int64_t>(v);  // truncates toward zero
  } else if (ts_it->is_string()) {
    const auto ts = parse_timestamp(ts_it->get<std::string>());
    if (!ts) {
      out.reason = "invalid timestamp";
      return out;
    }
    seconds = ts->seconds;
    naive = !ts->zone_known;
  } else {
    out.reason = "invalid timestamp";
    return out;
  }
  out.ok = true;
  out.naive_zone = naive;
  out.record = RawEventRecord{user, seconds, lineno};
  return out;
}

}  // namespace

ParseResult parse_events(std::istream& in, InputFormat format, ParseMode mode) {
  ParseResult result;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = format != InputFormat::csv;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line == kCsvHeader) continue;
      if (mode == ParseMode::strict) {
        throw ParseError(lineno, "expected header 'user_id,timestamp'");
      }
      // Lenient: fall through and try the line as a record.
    }
    LineOutcome outcome = format == InputFormat::csv
                              ? parse_csv_line(line, lineno)
                              : parse_jsonl_line(line, lineno);
    if (!outcome.ok) {
      if (mode == ParseMode::strict) throw ParseError(lineno, outcome.reason);
      result.skipped.push_back({lineno, std::move(outcome.reason)});
      continue;
    }
    if (outcome.naive_zone) ++result.naive_timestamp_count;
    result.records.push_back(std::move(outcome.record));
  }
  return result;
}

ParseResult parse_events_file(const std::string& path, InputFormat format,
                              ParseMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  return parse_events(in, format, mode);
}

std::map<std::string, EventStream> build_streams(
    std::vector<RawEventRecord> records, DedupPolicy policy) {
  std::map<std::string, std::vector<std::int64_t>> grouped;
  for (auto& r : records) {
    grouped[std::move(r.user_id)].push_back(r.timestamp);
  }
  std::map<std::string, EventStream> streams;
  for (auto& [user, timestamps] : grouped) {
    std::sort(timestamps.begin(), timestamps.end());
    EventStream stream;
    stream.user_id = user;
    stream.timestamps.reserve(timestamps.size());
    if (policy == DedupPolicy::merge) {
      for (const auto t : timestamps) {
        if (!stream.timestamps.empty() && stream.timestamps.back() == t) {
          ++stream.duplicate_count;
          continue;
        }
        stream.timestamps.push_back(t);
      }
    } else {
      for (const auto t : timestamps) {
        std::int64_t assigned = t;
        if (!stream.timestamps.empty() &&
            assigned <= stream.timestamps.back()) {
          assigned = stream.timestamps.back() + 1;
          ++stream.duplicate_count;
        }
        stream.timestamps.push_back(assigned);
      }
    }
    streams.emplace(user, std::move(stream));
  }
  return streams;
}

std::size_t original_count(const EventStream& stream, DedupPolicy policy) {
  if (policy == DedupPolicy::merge) {
    return stream.timestamps.size() + stream.duplicate_count;
  }
  return stream.timestamps.size();
}

StreamSummary summarize(const EventStream& stream, std::size_t original_count) {
  if (stream.timestamps.empty()) throw EmptyStream();
  StreamSummary summary;
  summary.user_id = stream.user_id;
  summary.message_count = original_count;
  summary.first_ts = stream.timestamps.front();
  summary.last_ts = stream.timestamps.back();
  summary.span_months =
      static_cast<double>(summary.last_ts - summary.first_ts) / kSecondsPerMonth;
  return summary;
}

void write_csv(const std::map<std::string, EventStream>& streams,
               std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& [user, stream] : streams) {
    for (const auto t : stream.timestamps) {
      out << user << ',' << t << '\n';
    }
  }
}

void write_csv(const EventStream& stream, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto t : stream.timestamps) {
    out << stream.user_id << ',' << t << '\n';
  }
}

}  // namespace taukit
