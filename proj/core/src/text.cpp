#include "taukit/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace taukit {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::optional<double> parse_duration(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double scale = 1.0;
  switch (text.back()) {
    case 's': scale = 1.0; text.remove_suffix(1); break;
    case 'm': scale = 60.0; text.remove_suffix(1); break;
    case 'h': scale = 3600.0; text.remove_suffix(1); break;
    case 'd': scale = 86400.0; text.remove_suffix(1); break;
    default: break;
  }
  if (text.empty()) return std::nullopt;
  double value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value * scale;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Epoch seconds: digits with an optional fractional part, truncated
// toward zero. Signed input is rejected (timestamps are >= 0).
std::optional<std::int64_t> parse_epoch(std::string_view s) {
  const auto dot = s.find('.');
  std::string_view whole = (dot == std::string_view::npos) ? s : s.substr(0, dot);
  if (!all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos) {
    const std::string_view frac = s.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
  }
  std::int64_t value = 0;
  const auto res = std::from_chars(whole.data(), whole.data() + whole.size(), value);
  if (res.ec != std::errc{}) return std::nullopt;
  return value;
}

std::optional<int> take_digits(std::string_view& s, std::size_t count) {
  if (s.size() < count || !all_digits(s.substr(0, count))) return std::nullopt;
  int value = 0;
  for (std::size_t i = 0; i < count; ++i) value = value * 10 + (s[i] - '0');
  s.remove_prefix(count);
  return value;
}

bool take_char(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

bool is_leap(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[static_cast<std::size_t>(m - 1)];
}

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const auto doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::optional<ParsedTimestamp> parse_iso8601(std::string_view s) {
  const auto year = take_digits(s, 4);
  if (!year || !take_char(s, '-')) return std::nullopt;
  const auto month = take_digits(s, 2);
  if (!month || *month < 1 || *month > 12 || !take_char(s, '-')) return std::nullopt;
  const auto day = take_digits(s, 2);
  if (!day || *day < 1 || *day > days_in_month(*year, *month)) return std::nullopt;
  if (s.empty() || (s.front() != 'T' && s.front() != 't')) return std::nullopt;
  s.remove_prefix(1);
  const auto hour = take_digits(s, 2);
  if (!hour || *hour > 23 || !take_char(s, ':')) return std::nullopt;
  const auto minute = take_digits(s, 2);
  if (!minute || *minute > 59 || !take_char(s, ':')) return std::nullopt;
  const auto second = take_digits(s, 2);
  if (!second || *second > 59) return std::nullopt;

  // Fractional seconds truncate toward zero.
  if (!s.empty() && s.front() == '.') {
    s.remove_prefix(1);
    std::size_t n = 0;
    while (n < s.size() && s[n] >= '0' && s[n] <= '9') ++n;
    if (n == 0) return std::nullopt;
    s.remove_prefix(n);
  }

  bool zone_known = true;
  std::int64_t offset_s = 0;
  if (s.empty()) {
    zone_known = false;
  } else if (s.front() == 'Z' || s.front() == 'z') {
    s.remove_prefix(1);
    if (!s.empty()) return std::nullopt;
  } else if (s.front() == '+' || s.front() == '-') {
    const int sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
    const auto oh = take_digits(s, 2);
    if (!oh || *oh > 14) return std::nullopt;
    int om = 0;
    if (!s.empty()) {
      take_char(s, ':');
      const auto parsed = take_digits(s, 2);
      if (!parsed || *parsed > 59 || !s.empty()) return std::nullopt;
      om = *parsed;
    }
    offset_s = sign * (*oh * 3600 + om * 60);
  } else {
    return std::nullopt;
  }

  const std::int64_t epoch = days_from_civil(*year, *month, *day) * 86400 +
                             *hour * 3600 + *minute * 60 + *second - offset_s;
  if (epoch < 0) return std::nullopt;
  return ParsedTimestamp{epoch, zone_known};
}

}  // namespace

std::optional<ParsedTimestamp> parse_timestamp(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (const auto epoch = parse_epoch(text)) {
    return ParsedTimestamp{*epoch, true};
  }
  return parse_iso8601(text);
}

}  // namespace taukit
