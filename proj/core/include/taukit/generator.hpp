#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "taukit/intervals.hpp"

namespace taukit {

enum class GeneratorKind { poisson, powerlaw, periodic, alternating };

// A synthetic interval process with known ground truth. Generation is a
// pure function of these fields: same parameters, bit-identical sequence.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::poisson;
  double rate = 1.0;    // poisson: events per second, > 0
  double alpha = 1.5;   // powerlaw: density exponent, > 1
  double xmin = 1.0;    // powerlaw: scale, > 0
  double period = 1.0;  // periodic: constant interval, > 0
  double a = 1.0;       // alternating: first value, > 0
  double b = 2.0;       // alternating: second value, > 0, != a
  std::size_t count = 1;       // number of intervals, >= 1
  std::uint64_t seed = 0;
};

// Inverse-CDF kernels, exposed so tests can pin the transforms.
// exponential: tau = -log(1 - u) / rate
// powerlaw:    tau = xmin * (1 - u)^(-1 / (alpha - 1)), survival
//              (x / xmin)^-(alpha-1)
double exponential_inverse_cdf(double u, double rate);
double powerlaw_inverse_cdf(double u, double alpha, double xmin);

// Throws InvalidSpec on out-of-domain parameters.
void validate(const GeneratorSpec& spec);

// Draws use PCG32(seed) on the sample stream, one unit double per
// interval, in order. Throws InvalidSpec.
IntervalSequence generate(const GeneratorSpec& spec);

struct MetricTarget {
  double value = 0;
  double tolerance = 0;  // |observed - value| <= tolerance
};

// Analytic targets implied by a spec, for verifying a pipeline run.
struct ExpectedMetrics {
  std::optional<MetricTarget> burstiness;
  std::optional<double> burstiness_min;  // one-sided heavy-tail bound
  std::optional<MetricTarget> memory;
  bool memory_undefined = false;
  std::optional<MetricTarget> alpha;
};

ExpectedMetrics expected_metrics(const GeneratorSpec& spec);

// Event-file form of a generated sequence: timestamps are the running
// sum of intervals starting at t = 0, truncated to whole seconds, under
// user id "synthetic". Collisions at 1-second resolution are possible
// and left to the ingest dedup policy.
void write_synthetic_events(const IntervalSequence& seq, std::ostream& out);

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view text);

}  // namespace taukit
