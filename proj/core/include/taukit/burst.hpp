#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "taukit/intervals.hpp"

namespace taukit {

enum class BurstClass { bursty, poisson_like, periodic_like };
enum class MemoryClass { memory, anti_memory, undefined };
enum class MemoryUndefinedReason { zero_variance, too_short };

// Burstiness and lag-1 memory of an interval sequence, with the moments
// they derive from. Memory is left unset (with a reason) rather than
// reported as 0 or NaN when it is undefined.
struct BurstMetrics {
  double burstiness = 0;                // in [-1, 1]; -1 iff stddev == 0
  std::optional<double> memory;         // in [-1, 1] when defined
  std::optional<MemoryUndefinedReason> memory_undefined_reason;
  double mean_interval = 0;
  double stddev_interval = 0;
  std::size_t count = 0;
};

// (stddev - mean) / (stddev + mean) with population moments.
// -1 for constant sequences, near 0 for exponential interarrivals,
// approaching 1 for heavy tails. Throws InsufficientEvents when empty.
double burstiness(const IntervalSequence& seq);

// Pearson correlation between the first n-1 and last n-1 intervals,
// each offset subsequence centered and scaled by its own population
// moments. Throws InsufficientEvents for n < 2 and ZeroVariance when
// either subsequence is constant.
double memory(const IntervalSequence& seq);

// Aggregate view; converts the memory error cases into markers.
BurstMetrics burst_metrics(const IntervalSequence& seq);

struct Classification {
  BurstClass burst = BurstClass::poisson_like;
  MemoryClass memory = MemoryClass::undefined;
};

struct ClassifyOptions {
  double burst_threshold = 0.1;  // |B| <= threshold reads as poisson-like
};

// Burst class by threshold on B; memory class by the sign of M with no
// neutral band (M >= 0 counts as memory).
Classification classify(const BurstMetrics& metrics,
                        const ClassifyOptions& options = {});

std::string_view to_string(BurstClass c);
std::string_view to_string(MemoryClass c);
std::string_view to_string(MemoryUndefinedReason r);

}  // namespace taukit
