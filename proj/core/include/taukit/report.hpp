#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taukit/burst.hpp"
#include "taukit/events.hpp"
#include "taukit/powerlaw.hpp"

namespace taukit {

struct AnalyzeOptions {
  DedupPolicy dedup = DedupPolicy::merge;
  FitMethod fit_method = FitMethod::mle;
  Xmin xmin = Xmin::smallest();
  ClassifyOptions classify;
  std::optional<double> window_s;     // optional interval truncation
  unsigned threads = 1;               // 0 = one per hardware thread
  std::optional<std::uint64_t> seed;  // provenance echo for synthetic runs
};

// One analysis row. Cells that cannot be computed carry a reason token
// instead of a value; renderers emit them as `undef(<reason>)`.
struct UserRow {
  std::string user_id;
  std::size_t message_count = 0;
  double span_months = 0;
  std::size_t n_tau = 0;
  std::optional<PowerLawFit> fit;
  std::string fit_error;
  std::optional<double> burstiness;
  std::optional<double> memory;
  std::optional<MemoryUndefinedReason> memory_reason;
  std::optional<Classification> classes;
};

struct SkippedUser {
  std::string user_id;
  std::string reason;
};

struct AnalysisReport {
  std::vector<std::string> inputs;
  AnalyzeOptions options;
  std::vector<UserRow> rows;         // user_id ascending
  std::vector<SkippedUser> skipped;  // users with fewer than 2 events
  std::size_t skipped_line_count = 0;
  std::size_t naive_timestamp_count = 0;
};

// Runs intervals -> fit -> burstiness/memory -> classify per user.
// Users with fewer than 2 events land in `skipped`. Deterministic
// regardless of the thread count: rows are merged in user_id order.
AnalysisReport analyze_streams(const std::map<std::string, EventStream>& streams,
                               const AnalyzeOptions& options);

// TSV with `# `-prefixed run-header lines; `human` pads columns for
// reading instead. Output is byte-stable for identical inputs and
// options (the version slot aside).
void render_analysis_tsv(const AnalysisReport& report, std::ostream& out,
                         bool human = false);

struct SweepOptions {
  std::vector<double> windows_s;  // positive, ascending
  AnalyzeOptions analysis;
};

std::vector<double> default_sweep_windows();  // 1h..5h

struct SweepRow {
  std::string user_id;
  double window_s = 0;
  std::size_t n_tail = 0;
  std::optional<double> alpha;
  std::optional<double> ks_stat;
  std::string error;
};

struct SweepReport {
  std::vector<std::string> inputs;
  SweepOptions options;
  std::vector<SweepRow> rows;  // user_id ascending, then window ascending
  std::vector<SkippedUser> skipped;
};

// Truncate-then-refit per (user, window); emits a row per pair even
// when the fit fails.
SweepReport run_sweep(const std::map<std::string, EventStream>& streams,
                      const SweepOptions& options);

void render_sweep_tsv(const SweepReport& report, std::ostream& out,
                      bool human = false);

struct CcdfExport {
  CcdfPoints empirical;
  std::optional<CcdfPoints> model;  // model survival at the same x >= xmin
};

// Empirical CCDF for one stream, optionally with fitted model points.
// Throws InsufficientEvents for streams with fewer than 2 events.
CcdfExport export_ccdf(const EventStream& stream, bool with_fit,
                       FitMethod method, Xmin xmin);

}  // namespace taukit
