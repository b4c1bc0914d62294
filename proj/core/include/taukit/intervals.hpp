#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "taukit/events.hpp"

namespace taukit {

// Consecutive inter-event durations of one user, in chronological
// order. Every interval is positive; a stream of k events yields k-1
// intervals.
struct IntervalSequence {
  std::string user_id;
  std::vector<double> intervals;

  std::size_t size() const noexcept { return intervals.size(); }
  bool empty() const noexcept { return intervals.empty(); }
};

// Population-convention moments (divisor n). The whole library uses the
// population convention; it keeps the burstiness of a constant sequence
// exactly -1 and the memory coefficient inside [-1, 1].
struct MomentSummary {
  double mean = 0;
  double stddev = 0;
  double min = 0;
  double max = 0;
  std::size_t count = 0;
};

// Throws InsufficientEvents on streams with fewer than two events.
IntervalSequence intervals_of(const EventStream& stream);

// Throws InsufficientEvents on an empty sequence. A constant sequence
// reports stddev exactly 0 and mean exactly the repeated value.
MomentSummary moments(const IntervalSequence& seq);

// Keeps, in order, the intervals <= window_s (boundary inclusive).
// Throws DomainError unless window_s > 0. May return an empty sequence.
IntervalSequence truncate(const IntervalSequence& seq, double window_s);

// Seeded Fisher-Yates permutation of the intervals; deterministic for a
// given seed (PCG32 on the shuffle stream, high-to-low index walk).
IntervalSequence shuffle_intervals(const IntervalSequence& seq,
                                   std::uint64_t seed);

}  // namespace taukit
