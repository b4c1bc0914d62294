#include "taukit/generator.hpp"

#include <cmath>
#include <ostream>

#include "taukit/errors.hpp"
#include "taukit/rng.hpp"

namespace taukit {

double exponential_inverse_cdf(double u, double rate) {
  return -std::log(1.0 - u) / rate;
}

double powerlaw_inverse_cdf(double u, double alpha, double xmin) {
  return xmin * std::pow(1.0 - u, -1.0 / (alpha - 1.0));
}

void validate(const GeneratorSpec& spec) {
  if (spec.count < 1) throw InvalidSpec("count must be >= 1");
  switch (spec.kind) {
    case GeneratorKind::poisson:
      if (!(spec.rate > 0)) throw InvalidSpec("rate must be > 0");
      break;
    case GeneratorKind::powerlaw:
      if (!(spec.alpha > 1)) throw InvalidSpec("alpha must be > 1");
      if (!(spec.xmin > 0)) throw InvalidSpec("xmin must be > 0");
      break;
    case GeneratorKind::periodic:
      if (!(spec.period > 0)) throw InvalidSpec("period must be > 0");
      break;
    case GeneratorKind::alternating:
      if (!(spec.a > 0) || !(spec.b > 0)) {
        throw InvalidSpec("a and b must be > 0");
      }
      if (spec.a == spec.b) throw InvalidSpec("a and b must differ");
      break;
  }
}

IntervalSequence generate(const GeneratorSpec& spec) {
  validate(spec);
  IntervalSequence seq;
  seq.user_id = "synthetic";
  seq.intervals.reserve(spec.count);
  Pcg32 rng(spec.seed, kSampleStream);
  for (std::size_t i = 0; i < spec.count; ++i) {
    switch (spec.kind) {
      case GeneratorKind::poisson:
        seq.intervals.push_back(exponential_inverse_cdf(rng.next_unit(), spec.rate));
        break;
      case GeneratorKind::powerlaw:
        seq.intervals.push_back(
            powerlaw_inverse_cdf(rng.next_unit(), spec.alpha, spec.xmin));
        break;
      case GeneratorKind::periodic:
        seq.intervals.push_back(spec.period);
        break;
      case GeneratorKind::alternating:
        seq.intervals.push_back(i % 2 == 0 ? spec.a : spec.b);
        break;
    }
  }
  return seq;
}

namespace {

// Exact population burstiness of the finite alternating sequence
// a,b,a,b,... with n terms.
double alternating_burstiness(double a, double b, std::size_t n) {
  const auto na = static_cast<double>((n + 1) / 2);
  const auto nb = static_cast<double>(n / 2);
  const auto total = static_cast<double>(n);
  const double mean = (na * a + nb * b) / total;
  const double var =
      (na * (a - mean) * (a - mean) + nb * (b - mean) * (b - mean)) / total;
  const double sd = std::sqrt(var);
  return (sd - mean) / (sd + mean);
}

}  // namespace

ExpectedMetrics expected_metrics(const GeneratorSpec& spec) {
  validate(spec);
  ExpectedMetrics out;
  const auto n = static_cast<double>(spec.count);
  const double three_se = 3.0 / std::sqrt(n);
  switch (spec.kind) {
    case GeneratorKind::poisson:
      out.burstiness = MetricTarget{0.0, three_se};
      if (spec.count >= 2) {
        out.memory = MetricTarget{0.0, three_se};
      } else {
        out.memory_undefined = true;
      }
      break;
    case GeneratorKind::powerlaw:
      out.alpha = MetricTarget{
          spec.alpha,
          std::max(0.05, 4.0 * (spec.alpha - 1.0) / std::sqrt(n))};
      if (spec.alpha < 2.0 && spec.count >= 10000) out.burstiness_min = 0.8;
      if (spec.count >= 2) {
        out.memory = MetricTarget{0.0, three_se};
      } else {
        out.memory_undefined = true;
      }
      break;
    case GeneratorKind::periodic:
      out.burstiness = MetricTarget{-1.0, 0.0};
      out.memory_undefined = true;
      break;
    case GeneratorKind::alternating:
      out.burstiness =
          MetricTarget{alternating_burstiness(spec.a, spec.b, spec.count), 1e-9};
      if (spec.count >= 3) {
        out.memory = MetricTarget{-1.0, 1e-9};
      } else {
        // Both offset subsequences are a single value; variance is zero.
        out.memory_undefined = true;
      }
      break;
  }
  return out;
}

void write_synthetic_events(const IntervalSequence& seq, std::ostream& out) {
  out << "user_id,timestamp\n";
  out << seq.user_id << ",0\n";
  double t = 0;
  for (const double tau : seq.intervals) {
    t += tau;
    out << seq.user_id << ',' << static_cast<std::int64_t>(t) << '\n';
  }
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::poisson: return "poisson";
    case GeneratorKind::powerlaw: return "powerlaw";
    case GeneratorKind::periodic: return "periodic";
    case GeneratorKind::alternating: return "alternating";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) {
  if (text == "poisson") return GeneratorKind::poisson;
  if (text == "powerlaw") return GeneratorKind::powerlaw;
  if (text == "periodic") return GeneratorKind::periodic;
  if (text == "alternating") return GeneratorKind::alternating;
  return std::nullopt;
}

}  // namespace taukit
