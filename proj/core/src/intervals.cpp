#include "taukit/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "taukit/errors.hpp"
#include "taukit/rng.hpp"

namespace taukit {

IntervalSequence intervals_of(const EventStream& stream) {
  if (stream.timestamps.size() < 2) {
    throw InsufficientEvents("need at least 2 events to form intervals");
  }
  IntervalSequence seq;
  seq.user_id = stream.user_id;
  seq.intervals.reserve(stream.timestamps.size() - 1);
  for (std::size_t i = 1; i < stream.timestamps.size(); ++i) {
    seq.intervals.push_back(
        static_cast<double>(stream.timestamps[i] - stream.timestamps[i - 1]));
  }
  return seq;
}

MomentSummary moments(const IntervalSequence& seq) {
  if (seq.empty()) throw InsufficientEvents("no intervals");
  MomentSummary m;
  m.count = seq.size();
  const auto [lo, hi] =
      std::minmax_element(seq.intervals.begin(), seq.intervals.end());
  m.min = *lo;
  m.max = *hi;
  if (m.min == m.max) {
    // Constant sequence: zero variance exactly, independent of how the
    // mean would round.
    m.mean = m.min;
    m.stddev = 0;
    return m;
  }
  double sum = 0;
  for (const double v : seq.intervals) sum += v;
  m.mean = sum / static_cast<double>(m.count);
  double ss = 0;
  for (const double v : seq.intervals) {
    const double d = v - m.mean;
    ss += d * d;
  }
  m.stddev = std::sqrt(ss / static_cast<double>(m.count));
  return m;
}

IntervalSequence truncate(const IntervalSequence& seq, double window_s) {
  if (!(window_s > 0)) throw DomainError("truncation window must be positive");
  IntervalSequence out;
  out.user_id = seq.user_id;
  for (const double v : seq.intervals) {
    if (v <= window_s) out.intervals.push_back(v);
  }
  return out;
}

IntervalSequence shuffle_intervals(const IntervalSequence& seq,
                                   std::uint64_t seed) {
  if (seq.empty()) throw InsufficientEvents("no intervals");
  IntervalSequence out = seq;
  Pcg32 rng(seed, kShuffleStream);
  for (std::size_t i = out.intervals.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i + 1));
    std::swap(out.intervals[i], out.intervals[j]);
  }
  return out;
}

}  // namespace taukit
