#include <cstddef>
#include <map>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "taukit/burst.hpp"
#include "taukit/events.hpp"
#include "taukit/generator.hpp"
#include "taukit/intervals.hpp"
#include "taukit/powerlaw.hpp"
#include "taukit/report.hpp"

namespace {

taukit::GeneratorSpec heavy_tail(std::size_t count) {
  taukit::GeneratorSpec spec;
  spec.kind = taukit::GeneratorKind::powerlaw;
  spec.alpha = 1.5;
  spec.xmin = 1.0;
  spec.count = count;
  spec.seed = 7;
  return spec;
}

std::string synthetic_csv(std::size_t count) {
  taukit::GeneratorSpec spec;
  spec.kind = taukit::GeneratorKind::poisson;
  spec.rate = 1.0 / 60.0;
  spec.count = count;
  spec.seed = 11;
  std::ostringstream out;
  taukit::write_synthetic_events(taukit::generate(spec), out);
  return out.str();
}

void BM_ParseCsv(benchmark::State& state) {
  const std::string csv = synthetic_csv(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::istringstream in(csv);
    auto result = taukit::parse_events(in, taukit::InputFormat::csv,
                                       taukit::ParseMode::lenient);
    benchmark::DoNotOptimize(result.records.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParseCsv)->Arg(1 << 12)->Arg(1 << 16);

void BM_Generate(benchmark::State& state) {
  const auto spec = heavy_tail(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto seq = taukit::generate(spec);
    benchmark::DoNotOptimize(seq.intervals.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(1 << 12)->Arg(1 << 17);

void BM_FitMle(benchmark::State& state) {
  const auto seq = taukit::generate(heavy_tail(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto fit = taukit::fit_mle(seq);
    benchmark::DoNotOptimize(fit.alpha);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitMle)->Arg(1 << 12)->Arg(1 << 17);

void BM_FitScanXmin(benchmark::State& state) {
  const auto seq = taukit::generate(heavy_tail(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto fit = taukit::fit_mle(seq, taukit::Xmin::scan());
    benchmark::DoNotOptimize(fit.xmin);
  }
}
BENCHMARK(BM_FitScanXmin)->Arg(1 << 10)->Arg(1 << 12);

void BM_BurstMetrics(benchmark::State& state) {
  const auto seq = taukit::generate(heavy_tail(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto metrics = taukit::burst_metrics(seq);
    benchmark::DoNotOptimize(metrics.burstiness);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BurstMetrics)->Arg(1 << 12)->Arg(1 << 17);

void BM_AnalyzePipeline(benchmark::State& state) {
  const std::string csv = synthetic_csv(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::istringstream in(csv);
    auto parsed = taukit::parse_events(in, taukit::InputFormat::csv,
                                       taukit::ParseMode::lenient);
    auto streams = taukit::build_streams(std::move(parsed.records),
                                         taukit::DedupPolicy::merge);
    auto report = taukit::analyze_streams(streams, taukit::AnalyzeOptions{});
    benchmark::DoNotOptimize(report.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AnalyzePipeline)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
