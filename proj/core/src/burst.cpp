#include "taukit/burst.hpp"

#include <algorithm>
#include <cmath>

#include "taukit/errors.hpp"

namespace taukit {

double burstiness(const IntervalSequence& seq) {
  const MomentSummary m = moments(seq);  // throws on empty
  return (m.stddev - m.mean) / (m.stddev + m.mean);
}

double memory(const IntervalSequence& seq) {
  const std::size_t n = seq.size();
  if (n < 2) {
    throw InsufficientEvents("memory needs at least 2 intervals");
  }
  const auto& v = seq.intervals;
  // A constant subsequence has zero variance even when its computed
  // mean rounds a last ulp away from the common value, so catch that
  // case before any arithmetic.
  const auto [lead_min, lead_max] = std::minmax_element(v.begin(), v.end() - 1);
  const auto [lag_min, lag_max] = std::minmax_element(v.begin() + 1, v.end());
  if (*lead_min == *lead_max || *lag_min == *lag_max) throw ZeroVariance();
  const auto len = static_cast<double>(n - 1);
  double mean_lead = 0;
  double mean_lag = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    mean_lead += v[i];
    mean_lag += v[i + 1];
  }
  mean_lead /= len;
  mean_lag /= len;
  double s_cross = 0;
  double s_lead = 0;
  double s_lag = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = v[i] - mean_lead;
    const double e = v[i + 1] - mean_lag;
    s_cross += d * e;
    s_lead += d * d;
    s_lag += e * e;
  }
  if (s_lead == 0 || s_lag == 0) throw ZeroVariance();
  // The 1/(n-1) and sigma factors cancel into a single square root;
  // clamping absorbs the last ulp of rounding.
  const double r = s_cross / std::sqrt(s_lead * s_lag);
  return std::clamp(r, -1.0, 1.0);
}

BurstMetrics burst_metrics(const IntervalSequence& seq) {
  const MomentSummary m = moments(seq);
  BurstMetrics metrics;
  metrics.mean_interval = m.mean;
  metrics.stddev_interval = m.stddev;
  metrics.count = m.count;
  metrics.burstiness = (m.stddev - m.mean) / (m.stddev + m.mean);
  try {
    metrics.memory = memory(seq);
  } catch (const ZeroVariance&) {
    metrics.memory_undefined_reason = MemoryUndefinedReason::zero_variance;
  } catch (const InsufficientEvents&) {
    metrics.memory_undefined_reason = MemoryUndefinedReason::too_short;
  }
  return metrics;
}

Classification classify(const BurstMetrics& metrics,
                        const ClassifyOptions& options) {
  Classification c;
  if (metrics.burstiness > options.burst_threshold) {
    c.burst = BurstClass::bursty;
  } else if (metrics.burstiness < -options.burst_threshold) {
    c.burst = BurstClass::periodic_like;
  } else {
    c.burst = BurstClass::poisson_like;
  }
  if (metrics.memory.has_value()) {
    c.memory = *metrics.memory < 0 ? MemoryClass::anti_memory
                                   : MemoryClass::memory;
  } else {
    c.memory = MemoryClass::undefined;
  }
  return c;
}

std::string_view to_string(BurstClass c) {
  switch (c) {
    case BurstClass::bursty: return "bursty";
    case BurstClass::poisson_like: return "poisson-like";
    case BurstClass::periodic_like: return "periodic-like";
  }
  return "?";
}

std::string_view to_string(MemoryClass c) {
  switch (c) {
    case MemoryClass::memory: return "memory";
    case MemoryClass::anti_memory: return "anti-memory";
    case MemoryClass::undefined: return "undefined";
  }
  return "?";
}

std::string_view to_string(MemoryUndefinedReason r) {
  switch (r) {
    case MemoryUndefinedReason::zero_variance: return "zero-variance";
    case MemoryUndefinedReason::too_short: return "too-short";
  }
  return "?";
}

}  // namespace taukit
