#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "taukit/errors.hpp"
#include "taukit/events.hpp"
#include "taukit/generator.hpp"
#include "taukit/intervals.hpp"
#include "taukit/powerlaw.hpp"
#include "taukit/report.hpp"
#include "taukit/text.hpp"
#include "taukit/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

using taukit::format_double;

// Shared ingest flags; `-` (or no positional at all) reads stdin.
struct IngestCli {
  std::vector<std::string> inputs;
  std::string format = "csv";
  std::string dedup = "merge";
  bool strict = false;
};

struct AnalyzeCli {
  IngestCli ingest;
  std::string xmin;
  std::string fit_method = "mle";
  std::string window;
  std::string threads = "1";
  double burst_threshold = 0.1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool human = false;
  std::string out;
};

struct CcdfCli {
  IngestCli ingest;
  std::string user;
  std::string xmin;
  std::string fit_method = "mle";
  bool fit = false;
  std::string out;
};

struct SweepCli {
  IngestCli ingest;
  std::vector<std::string> users;
  std::string windows = "1h,2h,3h,4h,5h";
  std::string xmin;
  std::string fit_method = "mle";
  std::string threads = "1";
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool human = false;
  std::string out;
};

struct GenerateCli {
  std::string kind;
  double rate = 1.0;
  double alpha = 1.5;
  double xmin = 1.0;
  double period = 1.0;
  double a = 1.0;
  double b = 2.0;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

struct Loaded {
  std::vector<std::string> inputs;
  std::map<std::string, taukit::EventStream> streams;
  std::size_t skipped_lines = 0;
  std::size_t naive_timestamps = 0;
};

taukit::InputFormat to_format(const std::string& name) {
  return name == "jsonl" ? taukit::InputFormat::jsonl : taukit::InputFormat::csv;
}

taukit::DedupPolicy to_dedup(const std::string& name) {
  return name == "epsilon" ? taukit::DedupPolicy::keep_with_epsilon
                           : taukit::DedupPolicy::merge;
}

taukit::FitMethod to_fit_method(const std::string& name) {
  return name == "ccdf-ls" ? taukit::FitMethod::ccdf_ls : taukit::FitMethod::mle;
}

Loaded load_events(const IngestCli& cli) {
  Loaded loaded;
  loaded.inputs =
      cli.inputs.empty() ? std::vector<std::string>{"-"} : cli.inputs;
  const auto format = to_format(cli.format);
  const auto mode =
      cli.strict ? taukit::ParseMode::strict : taukit::ParseMode::lenient;
  std::vector<taukit::RawEventRecord> records;
  for (const std::string& path : loaded.inputs) {
    taukit::ParseResult result;
    try {
      result = path == "-" ? taukit::parse_events(std::cin, format, mode)
                           : taukit::parse_events_file(path, format, mode);
    } catch (const taukit::ParseError& e) {
      throw taukit::Error(path + ": " + e.what());
    }
    if (result.naive_timestamp_count > 0) {
      std::cerr << "warning: " << path << ": " << result.naive_timestamp_count
                << " timestamp(s) without a zone designator, treated as UTC\n";
    }
    loaded.skipped_lines += result.skipped.size();
    loaded.naive_timestamps += result.naive_timestamp_count;
    records.insert(records.end(),
                   std::make_move_iterator(result.records.begin()),
                   std::make_move_iterator(result.records.end()));
  }
  loaded.streams =
      taukit::build_streams(std::move(records), to_dedup(cli.dedup));
  return loaded;
}

// "auto" scans for the KS-minimizing cutoff; otherwise a positive
// duration (s/m/h/d suffixes, bare numbers are seconds). Empty keeps
// the default: fit from the smallest interval.
std::optional<taukit::Xmin> parse_xmin(const std::string& text) {
  if (text.empty()) return taukit::Xmin::smallest();
  if (text == "auto") return taukit::Xmin::scan();
  const auto seconds = taukit::parse_duration(text);
  if (!seconds || *seconds <= 0) return std::nullopt;
  return taukit::Xmin::at(*seconds);
}

std::optional<unsigned> parse_threads(const std::string& text) {
  if (text == "auto") return 0u;
  unsigned value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

// Comma-separated positive durations, strictly ascending.
std::optional<std::vector<double>> parse_windows(const std::string& text) {
  std::vector<double> windows;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const std::string piece = comma == std::string::npos
                                  ? text.substr(start)
                                  : text.substr(start, comma - start);
    const auto seconds = taukit::parse_duration(piece);
    if (!seconds || *seconds <= 0) return std::nullopt;
    if (!windows.empty() && *seconds <= windows.back()) return std::nullopt;
    windows.push_back(*seconds);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return windows;
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw taukit::IoError("cannot open output file: " + path);
  fn(out);
  out.flush();
  if (!out) throw taukit::IoError("failed writing output file: " + path);
}

// out.tsv -> out.model.tsv; extensionless paths get .model appended.
std::string model_path(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return path + ".model";
  }
  return path.substr(0, dot) + ".model" + path.substr(dot);
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

int run_analyze(const AnalyzeCli& cli) {
  taukit::AnalyzeOptions options;
  options.dedup = to_dedup(cli.ingest.dedup);
  options.fit_method = to_fit_method(cli.fit_method);
  const auto xmin = parse_xmin(cli.xmin);
  if (!xmin) return usage_error("--xmin expects 'auto' or a positive duration");
  options.xmin = *xmin;
  options.classify.burst_threshold = cli.burst_threshold;
  if (!cli.window.empty()) {
    const auto window = taukit::parse_duration(cli.window);
    if (!window || *window <= 0)
      return usage_error("--window expects a positive duration");
    options.window_s = *window;
  }
  const auto threads = parse_threads(cli.threads);
  if (!threads) return usage_error("--threads expects a count or 'auto'");
  options.threads = *threads;
  if (cli.seed_set) options.seed = cli.seed;

  Loaded loaded = load_events(cli.ingest);
  taukit::AnalysisReport report =
      taukit::analyze_streams(loaded.streams, options);
  report.inputs = std::move(loaded.inputs);
  report.skipped_line_count = loaded.skipped_lines;
  report.naive_timestamp_count = loaded.naive_timestamps;
  with_output(cli.out, [&](std::ostream& out) {
    taukit::render_analysis_tsv(report, out, cli.human);
  });
  return 0;
}

int run_ccdf(const CcdfCli& cli) {
  const auto xmin = parse_xmin(cli.xmin);
  if (!xmin) return usage_error("--xmin expects 'auto' or a positive duration");
  if (cli.fit && (cli.out.empty() || cli.out == "-"))
    return usage_error("--fit writes a sibling model file and needs --out");

  const Loaded loaded = load_events(cli.ingest);
  const auto found = loaded.streams.find(cli.user);
  if (found == loaded.streams.end()) throw taukit::UnknownUser(cli.user);
  const taukit::CcdfExport points = taukit::export_ccdf(
      found->second, cli.fit, to_fit_method(cli.fit_method), *xmin);
  with_output(cli.out, [&](std::ostream& out) {
    taukit::write_ccdf_tsv(points.empirical, out);
  });
  if (points.model) {
    with_output(model_path(cli.out), [&](std::ostream& out) {
      taukit::write_ccdf_tsv(*points.model, out);
    });
  }
  return 0;
}

int run_sweep(const SweepCli& cli) {
  taukit::SweepOptions options;
  options.analysis.dedup = to_dedup(cli.ingest.dedup);
  options.analysis.fit_method = to_fit_method(cli.fit_method);
  const auto xmin = parse_xmin(cli.xmin);
  if (!xmin) return usage_error("--xmin expects 'auto' or a positive duration");
  options.analysis.xmin = *xmin;
  const auto threads = parse_threads(cli.threads);
  if (!threads) return usage_error("--threads expects a count or 'auto'");
  options.analysis.threads = *threads;
  if (cli.seed_set) options.analysis.seed = cli.seed;
  const auto windows = parse_windows(cli.windows);
  if (!windows)
    return usage_error("--windows expects ascending positive durations");
  options.windows_s = *windows;

  Loaded loaded = load_events(cli.ingest);
  std::map<std::string, taukit::EventStream> selected;
  if (cli.users.empty()) {
    selected = std::move(loaded.streams);
  } else {
    for (const std::string& user : cli.users) {
      const auto found = loaded.streams.find(user);
      if (found == loaded.streams.end()) throw taukit::UnknownUser(user);
      selected.emplace(found->first, found->second);
    }
  }
  taukit::SweepReport report = taukit::run_sweep(selected, options);
  report.inputs = std::move(loaded.inputs);
  with_output(cli.out, [&](std::ostream& out) {
    taukit::render_sweep_tsv(report, out, cli.human);
  });
  return 0;
}

void print_expected_metrics(const taukit::ExpectedMetrics& expected,
                            std::ostream& err) {
  std::vector<std::string> parts;
  const auto target = [](const taukit::MetricTarget& t) {
    return format_double(t.value) + " +/- " + format_double(t.tolerance);
  };
  if (expected.alpha) parts.push_back("alpha " + target(*expected.alpha));
  if (expected.burstiness) parts.push_back("B " + target(*expected.burstiness));
  if (expected.burstiness_min)
    parts.push_back("B >= " + format_double(*expected.burstiness_min));
  if (expected.memory) parts.push_back("M " + target(*expected.memory));
  if (expected.memory_undefined) parts.push_back("M undefined");
  err << "# expected:";
  for (std::size_t i = 0; i < parts.size(); ++i)
    err << (i ? "; " : " ") << parts[i];
  err << '\n';
}

int run_generate(const GenerateCli& cli) {
  const auto kind = taukit::parse_generator_kind(cli.kind);
  if (!kind)
    return usage_error(
        "--kind expects poisson, powerlaw, periodic, or alternating");
  taukit::GeneratorSpec spec;
  spec.kind = *kind;
  spec.rate = cli.rate;
  spec.alpha = cli.alpha;
  spec.xmin = cli.xmin;
  spec.period = cli.period;
  spec.a = cli.a;
  spec.b = cli.b;
  spec.count = cli.count;
  spec.seed = cli.seed;

  const taukit::IntervalSequence seq = taukit::generate(spec);
  with_output(cli.out, [&](std::ostream& out) {
    out << "# generator kind=" << taukit::to_string(spec.kind);
    switch (spec.kind) {
      case taukit::GeneratorKind::poisson:
        out << " rate=" << format_double(spec.rate);
        break;
      case taukit::GeneratorKind::powerlaw:
        out << " alpha=" << format_double(spec.alpha)
            << " xmin=" << format_double(spec.xmin);
        break;
      case taukit::GeneratorKind::periodic:
        out << " period=" << format_double(spec.period);
        break;
      case taukit::GeneratorKind::alternating:
        out << " a=" << format_double(spec.a) << " b=" << format_double(spec.b);
        break;
    }
    out << " n=" << spec.count << " seed=" << spec.seed << '\n';
    taukit::write_synthetic_events(seq, out);
  });
  print_expected_metrics(taukit::expected_metrics(spec), std::cerr);
  return 0;
}

void add_ingest_flags(CLI::App* cmd, IngestCli& cli) {
  cmd->add_option("inputs", cli.inputs, "Event files; '-' or none reads stdin");
  cmd->add_option("--format", cli.format, "Input format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  cmd->add_option("--dedup", cli.dedup, "Same-second collision policy")
      ->check(CLI::IsMember({"merge", "epsilon"}))
      ->capture_default_str();
  cmd->add_flag("--strict", cli.strict,
                "Fail on the first malformed line instead of skipping it");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inter-event interval statistics for timestamped event logs"};
  app.name("taukit");
  app.set_version_flag("--version", std::string(taukit::kVersion));
  app.require_subcommand(1);

  AnalyzeCli analyze_cli;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Per-user fit, burstiness, and memory TSV");
  add_ingest_flags(analyze, analyze_cli.ingest);
  analyze->add_option("--xmin", analyze_cli.xmin,
                      "Fit cutoff: 'auto' or a duration (default: smallest)");
  analyze->add_option("--fit-method", analyze_cli.fit_method, "Tail estimator")
      ->check(CLI::IsMember({"mle", "ccdf-ls"}))
      ->capture_default_str();
  analyze->add_option("--window", analyze_cli.window,
                      "Drop intervals longer than this duration before fitting");
  analyze
      ->add_option("--burst-threshold", analyze_cli.burst_threshold,
                   "|B| at or below this reads as poisson-like")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  analyze->add_option("--threads", analyze_cli.threads,
                      "Worker threads, or 'auto' for one per core")
      ->capture_default_str();
  auto* analyze_seed = analyze->add_option(
      "--seed", analyze_cli.seed, "Echo a generator seed into the run header");
  analyze->add_flag("--human", analyze_cli.human, "Align columns for reading");
  analyze->add_option("-o,--out", analyze_cli.out, "Output path ('-' = stdout)");

  CcdfCli ccdf_cli;
  CLI::App* ccdf =
      app.add_subcommand("ccdf", "Empirical interval survival curve for one user");
  add_ingest_flags(ccdf, ccdf_cli.ingest);
  ccdf->add_option("--user", ccdf_cli.user, "User id to export")->required();
  ccdf->add_option("--xmin", ccdf_cli.xmin,
                   "Fit cutoff: 'auto' or a duration (default: smallest)");
  ccdf->add_option("--fit-method", ccdf_cli.fit_method, "Tail estimator")
      ->check(CLI::IsMember({"mle", "ccdf-ls"}))
      ->capture_default_str();
  ccdf->add_flag("--fit", ccdf_cli.fit,
                 "Also write fitted model survival to <out>.model.<ext>");
  ccdf->add_option("-o,--out", ccdf_cli.out, "Output path ('-' = stdout)");

  SweepCli sweep_cli;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Refit the tail under truncation windows");
  add_ingest_flags(sweep, sweep_cli.ingest);
  sweep->add_option("--user", sweep_cli.users,
                    "Restrict to these user ids (repeatable)");
  sweep->add_option("--windows", sweep_cli.windows,
                    "Comma-separated ascending durations")
      ->capture_default_str();
  sweep->add_option("--xmin", sweep_cli.xmin,
                    "Fit cutoff: 'auto' or a duration (default: smallest)");
  sweep->add_option("--fit-method", sweep_cli.fit_method, "Tail estimator")
      ->check(CLI::IsMember({"mle", "ccdf-ls"}))
      ->capture_default_str();
  sweep->add_option("--threads", sweep_cli.threads,
                    "Worker threads, or 'auto' for one per core")
      ->capture_default_str();
  auto* sweep_seed = sweep->add_option(
      "--seed", sweep_cli.seed, "Echo a generator seed into the run header");
  sweep->add_flag("--human", sweep_cli.human, "Align columns for reading");
  sweep->add_option("-o,--out", sweep_cli.out, "Output path ('-' = stdout)");

  GenerateCli generate_cli;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a synthetic event file with known metrics");
  generate
      ->add_option("--kind", generate_cli.kind,
                   "poisson | powerlaw | periodic | alternating")
      ->required();
  generate->add_option("--rate", generate_cli.rate, "poisson: events per second")
      ->capture_default_str();
  generate->add_option("--alpha", generate_cli.alpha, "powerlaw: exponent > 1")
      ->capture_default_str();
  generate->add_option("--xmin", generate_cli.xmin, "powerlaw: scale > 0")
      ->capture_default_str();
  generate->add_option("--period", generate_cli.period, "periodic: interval")
      ->capture_default_str();
  generate->add_option("--a", generate_cli.a, "alternating: odd intervals")
      ->capture_default_str();
  generate->add_option("--b", generate_cli.b, "alternating: even intervals")
      ->capture_default_str();
  generate->add_option("-n,--n", generate_cli.count, "Number of intervals")
      ->capture_default_str();
  generate->add_option("--seed", generate_cli.seed, "PCG32 stream seed")
      ->capture_default_str();
  generate->add_option("-o,--out", generate_cli.out, "Output path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  analyze_cli.seed_set = analyze_seed->count() > 0;
  sweep_cli.seed_set = sweep_seed->count() > 0;

  try {
    if (analyze->parsed()) return run_analyze(analyze_cli);
    if (ccdf->parsed()) return run_ccdf(ccdf_cli);
    if (sweep->parsed()) return run_sweep(sweep_cli);
    if (generate->parsed()) return run_generate(generate_cli);
  } catch (const taukit::InvalidSpec& e) {
    std::cerr << "error: " << e.what()
              << "\nrun 'taukit generate --help' for the parameter domains\n";
    return kExitUsage;
  } catch (const taukit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
