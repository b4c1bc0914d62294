#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "taukit/burst.hpp"
#include "taukit/errors.hpp"
#include "taukit/generator.hpp"
#include "taukit/powerlaw.hpp"
#include "taukit/rng.hpp"

using namespace taukit;

namespace {

GeneratorSpec powerlaw_spec(double alpha, std::size_t count,
                            std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::powerlaw;
  spec.alpha = alpha;
  spec.xmin = 1.0;
  spec.count = count;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_SUITE("generator") {

TEST_CASE("inverse cdfs match hand inversion") {
  CHECK(powerlaw_inverse_cdf(0.75, 1.5, 1.0) ==
        doctest::Approx(16.0).epsilon(1e-14));
  CHECK(powerlaw_inverse_cdf(0.5, 2.0, 3.0) ==
        doctest::Approx(6.0).epsilon(1e-14));

  CHECK(exponential_inverse_cdf(1.0 - std::exp(-1.0), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exponential_inverse_cdf(0.5, 2.0) ==
        doctest::Approx(std::log(2.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("deterministic kinds enumerate their patterns") {
  GeneratorSpec periodic;
  periodic.kind = GeneratorKind::periodic;
  periodic.period = 5;
  periodic.count = 3;
  const auto constant = generate(periodic);
  CHECK(constant.user_id == "synthetic");
  CHECK(constant.intervals == std::vector<double>{5, 5, 5});

  GeneratorSpec alternating;
  alternating.kind = GeneratorKind::alternating;
  alternating.a = 1;
  alternating.b = 9;
  alternating.count = 4;
  CHECK(generate(alternating).intervals == std::vector<double>{1, 9, 1, 9});
  alternating.count = 5;
  CHECK(generate(alternating).intervals == std::vector<double>{1, 9, 1, 9, 1});
}

TEST_CASE("generation is a pure function of its parameters") {
  const auto spec = powerlaw_spec(1.5, 2000, 99);
  CHECK(generate(spec).intervals == generate(spec).intervals);

  auto reseeded = spec;
  reseeded.seed = 100;
  CHECK(generate(reseeded).intervals != generate(spec).intervals);
}

TEST_CASE("sampling consumes the pinned rng stream in draw order") {
  Pcg32 rng(123, kSampleStream);
  const double u0 = rng.next_unit();
  const double u1 = rng.next_unit();

  const auto seq = generate(powerlaw_spec(1.5, 2, 123));
  CHECK(seq.intervals[0] == powerlaw_inverse_cdf(u0, 1.5, 1.0));
  CHECK(seq.intervals[1] == powerlaw_inverse_cdf(u1, 1.5, 1.0));

  GeneratorSpec poisson;
  poisson.kind = GeneratorKind::poisson;
  poisson.rate = 2.0;
  poisson.count = 1;
  poisson.seed = 123;
  CHECK(generate(poisson).intervals[0] == exponential_inverse_cdf(u0, 2.0));
}

TEST_CASE("out-of-domain parameters are rejected") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::poisson;
  spec.rate = 0;
  CHECK_THROWS_AS(generate(spec), InvalidSpec);

  spec = powerlaw_spec(1.0, 10, 0);
  CHECK_THROWS_AS(generate(spec), InvalidSpec);
  spec = powerlaw_spec(1.5, 10, 0);
  spec.xmin = 0;
  CHECK_THROWS_AS(generate(spec), InvalidSpec);

  spec = GeneratorSpec{};
  spec.kind = GeneratorKind::periodic;
  spec.period = -1;
  CHECK_THROWS_AS(generate(spec), InvalidSpec);

  spec = GeneratorSpec{};
  spec.kind = GeneratorKind::alternating;
  spec.a = 2;
  spec.b = 2;
  CHECK_THROWS_AS(generate(spec), InvalidSpec);
  spec.b = 0;
  CHECK_THROWS_AS(generate(spec), InvalidSpec);

  spec = GeneratorSpec{};
  spec.count = 0;
  CHECK_THROWS_AS(generate(spec), InvalidSpec);
}

TEST_CASE("poisson sample means converge to 1/rate") {
  for (const double rate : {0.5, 1.0, 4.0}) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::poisson;
    spec.rate = rate;
    spec.count = 100000;
    spec.seed = 7;
    const auto seq = generate(spec);
    double sum = 0;
    for (const double v : seq.intervals) sum += v;
    const double mean = sum / static_cast<double>(seq.size());
    const double stderr_mean = (1.0 / rate) / std::sqrt(100000.0);
    CHECK(std::abs(mean - 1.0 / rate) <= 3 * stderr_mean);
  }
}

TEST_CASE("large powerlaw samples match the model survival curve") {
  const auto seq = generate(powerlaw_spec(1.5, 100000, 3));
  PowerLawFit exact;
  exact.alpha = 1.5;
  exact.xmin = 1.0;
  CHECK(ks_statistic(seq, exact) <= 0.02);
}

TEST_CASE("expected metrics carry the analytic targets") {
  GeneratorSpec poisson;
  poisson.kind = GeneratorKind::poisson;
  poisson.rate = 2.0;
  poisson.count = 100000;
  auto expected = expected_metrics(poisson);
  REQUIRE(expected.burstiness);
  CHECK(expected.burstiness->value == 0.0);
  CHECK(expected.burstiness->tolerance == doctest::Approx(0.0095).epsilon(0.01));
  REQUIRE(expected.memory);
  CHECK(expected.memory->value == 0.0);
  CHECK_FALSE(expected.alpha);

  GeneratorSpec periodic;
  periodic.kind = GeneratorKind::periodic;
  periodic.period = 3;
  periodic.count = 50;
  expected = expected_metrics(periodic);
  REQUIRE(expected.burstiness);
  CHECK(expected.burstiness->value == -1.0);
  CHECK(expected.burstiness->tolerance == 0.0);
  CHECK(expected.memory_undefined);

  expected = expected_metrics(powerlaw_spec(1.5, 10000, 0));
  REQUIRE(expected.alpha);
  CHECK(expected.alpha->value == 1.5);
  REQUIRE(expected.burstiness_min);
  CHECK(*expected.burstiness_min == 0.8);

  expected = expected_metrics(powerlaw_spec(2.5, 10000, 0));
  CHECK_FALSE(expected.burstiness_min);  // finite variance, no 0.8 claim
}

TEST_CASE("generated sequences meet their own expected metrics") {
  GeneratorSpec poisson;
  poisson.kind = GeneratorKind::poisson;
  poisson.rate = 1.0;
  poisson.count = 100000;
  poisson.seed = 5;
  auto expected = expected_metrics(poisson);
  auto metrics = burst_metrics(generate(poisson));
  CHECK(std::abs(metrics.burstiness - expected.burstiness->value) <=
        expected.burstiness->tolerance);
  REQUIRE(metrics.memory);
  CHECK(std::abs(*metrics.memory - expected.memory->value) <=
        expected.memory->tolerance);

  GeneratorSpec alternating;
  alternating.kind = GeneratorKind::alternating;
  alternating.a = 2;
  alternating.b = 7;
  alternating.count = 101;
  expected = expected_metrics(alternating);
  metrics = burst_metrics(generate(alternating));
  REQUIRE(expected.burstiness);
  CHECK(std::abs(metrics.burstiness - expected.burstiness->value) <=
        expected.burstiness->tolerance);
  REQUIRE(expected.memory);
  REQUIRE(metrics.memory);
  CHECK(std::abs(*metrics.memory - expected.memory->value) <=
        expected.memory->tolerance);

  const auto spec = powerlaw_spec(1.5, 20000, 23);
  expected = expected_metrics(spec);
  const auto seq = generate(spec);
  const auto fit = fit_mle(seq, Xmin::at(1));
  CHECK(std::abs(fit.alpha - expected.alpha->value) <=
        expected.alpha->tolerance);
  CHECK(burstiness(seq) >= *expected.burstiness_min);
}

TEST_CASE("event serialization emits truncated cumulative sums") {
  GeneratorSpec periodic;
  periodic.kind = GeneratorKind::periodic;
  periodic.period = 5;
  periodic.count = 3;
  std::ostringstream out;
  write_synthetic_events(generate(periodic), out);
  CHECK(out.str() ==
        "user_id,timestamp\nsynthetic,0\nsynthetic,5\nsynthetic,10\n"
        "synthetic,15\n");

  GeneratorSpec alternating;
  alternating.kind = GeneratorKind::alternating;
  alternating.a = 1;
  alternating.b = 9;
  alternating.count = 2;
  std::ostringstream out2;
  write_synthetic_events(generate(alternating), out2);
  CHECK(out2.str() == "user_id,timestamp\nsynthetic,0\nsynthetic,1\nsynthetic,10\n");

  GeneratorSpec fractional;
  fractional.kind = GeneratorKind::periodic;
  fractional.period = 2.7;
  fractional.count = 3;
  std::ostringstream out3;
  write_synthetic_events(generate(fractional), out3);
  CHECK(out3.str() ==
        "user_id,timestamp\nsynthetic,0\nsynthetic,2\nsynthetic,5\nsynthetic,8\n");
}

TEST_CASE("kind names round-trip") {
  for (const auto kind :
       {GeneratorKind::poisson, GeneratorKind::powerlaw,
        GeneratorKind::periodic, GeneratorKind::alternating}) {
    const auto parsed = parse_generator_kind(to_string(kind));
    REQUIRE(parsed);
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(parse_generator_kind("weibull"));
  CHECK_FALSE(parse_generator_kind(""));
}

}  // TEST_SUITE
