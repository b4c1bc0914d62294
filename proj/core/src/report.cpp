#include "taukit/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "taukit/errors.hpp"
#include "taukit/text.hpp"
#include "taukit/version.hpp"

namespace taukit {

namespace {

std::string undef(std::string_view reason) {
  std::string out = "undef(";
  out += reason;
  out += ")";
  return out;
}

std::string_view to_string(DedupPolicy policy) {
  return policy == DedupPolicy::merge ? "merge" : "keep-with-epsilon";
}

std::string_view to_string(FitMethod method) {
  return method == FitMethod::mle ? "mle" : "ccdf-ls";
}

std::string to_string(Xmin xmin) {
  switch (xmin.mode) {
    case Xmin::Mode::smallest:
      return "smallest";
    case Xmin::Mode::explicit_value:
      return format_double(xmin.value);
    case Xmin::Mode::scan:
      return "auto";
  }
  return "smallest";
}

PowerLawFit fit_intervals(const IntervalSequence& seq, FitMethod method,
                          Xmin xmin) {
  return method == FitMethod::mle ? fit_mle(seq, xmin) : fit_ccdf_ls(seq, xmin);
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  unsigned workers =
      threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(drain);
  for (auto& worker : pool) worker.join();
  if (error) std::rethrow_exception(error);
}

UserRow analyze_user(const EventStream& stream, const AnalyzeOptions& options) {
  UserRow row;
  row.user_id = stream.user_id;
  const StreamSummary summary =
      summarize(stream, original_count(stream, options.dedup));
  row.message_count = summary.message_count;
  row.span_months = summary.span_months;
  IntervalSequence seq = intervals_of(stream);
  if (options.window_s) seq = truncate(seq, *options.window_s);
  row.n_tau = seq.size();
  if (seq.empty()) {
    row.fit_error = "insufficient-events";
    return row;
  }
  try {
    row.fit = fit_intervals(seq, options.fit_method, options.xmin);
  } catch (const DegenerateTail&) {
    row.fit_error = "degenerate-tail";
  } catch (const InsufficientEvents&) {
    row.fit_error = "insufficient-events";
  }
  const BurstMetrics metrics = burst_metrics(seq);
  row.burstiness = metrics.burstiness;
  row.memory = metrics.memory;
  row.memory_reason = metrics.memory_undefined_reason;
  row.classes = classify(metrics, options.classify);
  return row;
}

// Tab-joined rows, or space-padded columns in human mode. Comment and
// trailer lines are emitted verbatim either way.
void write_table(const std::vector<std::vector<std::string>>& rows,
                 std::ostream& out, bool human) {
  if (!human) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << '\t';
        out << row[c];
      }
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size())
        out << std::string(widths[c] - row[c].size(), ' ');
    }
    out << '\n';
  }
}

void write_inputs_line(const std::vector<std::string>& inputs,
                       std::ostream& out) {
  out << "# inputs:";
  if (inputs.empty()) out << " -";
  for (const auto& path : inputs) out << ' ' << path;
  out << '\n';
}

void write_skipped_trailer(const std::vector<SkippedUser>& skipped,
                           std::ostream& out) {
  for (const auto& user : skipped)
    out << "# skipped\t" << user.user_id << '\t' << user.reason << '\n';
}

}  // namespace

AnalysisReport analyze_streams(const std::map<std::string, EventStream>& streams,
                               const AnalyzeOptions& options) {
  AnalysisReport report;
  report.options = options;
  std::vector<const EventStream*> eligible;
  eligible.reserve(streams.size());
  for (const auto& [user_id, stream] : streams) {
    if (stream.timestamps.size() < 2)
      report.skipped.push_back({user_id, "insufficient-events"});
    else
      eligible.push_back(&stream);
  }
  report.rows.resize(eligible.size());
  parallel_for(eligible.size(), options.threads, [&](std::size_t i) {
    report.rows[i] = analyze_user(*eligible[i], options);
  });
  return report;
}

void render_analysis_tsv(const AnalysisReport& report, std::ostream& out,
                         bool human) {
  out << "# taukit analyze " << kVersion << '\n';
  write_inputs_line(report.inputs, out);
  const AnalyzeOptions& opt = report.options;
  out << "# dedup: " << to_string(opt.dedup) << '\n';
  out << "# fit: " << to_string(opt.fit_method) << '\n';
  out << "# xmin: " << to_string(opt.xmin) << '\n';
  if (opt.window_s) out << "# window: " << format_double(*opt.window_s) << '\n';
  if (opt.seed) out << "# seed: " << *opt.seed << '\n';
  out << "# skipped-lines: " << report.skipped_line_count << '\n';
  out << "# naive-timestamps: " << report.naive_timestamp_count << '\n';

  std::vector<std::vector<std::string>> table;
  table.push_back({"user_id", "message_count", "span_months", "n_tau", "alpha",
                   "xmin", "ks_stat", "B", "M", "burst_class", "memory_class"});
  for (const UserRow& row : report.rows) {
    std::vector<std::string> cells;
    cells.push_back(row.user_id);
    cells.push_back(std::to_string(row.message_count));
    cells.push_back(format_double(row.span_months));
    cells.push_back(std::to_string(row.n_tau));
    if (row.fit) {
      cells.push_back(format_double(row.fit->alpha));
      cells.push_back(format_double(row.fit->xmin));
      cells.push_back(format_double(row.fit->ks_stat));
    } else {
      const std::string token = undef(row.fit_error);
      cells.insert(cells.end(), 3, token);
    }
    if (row.burstiness)
      cells.push_back(format_double(*row.burstiness));
    else
      cells.push_back(undef("insufficient-events"));
    if (row.memory)
      cells.push_back(format_double(*row.memory));
    else if (row.memory_reason)
      cells.push_back(undef(taukit::to_string(*row.memory_reason)));
    else
      cells.push_back(undef("insufficient-events"));
    if (row.classes) {
      cells.push_back(std::string(taukit::to_string(row.classes->burst)));
      cells.push_back(std::string(taukit::to_string(row.classes->memory)));
    } else {
      cells.push_back(undef("insufficient-events"));
      cells.push_back(undef("insufficient-events"));
    }
    table.push_back(std::move(cells));
  }
  write_table(table, out, human);
  write_skipped_trailer(report.skipped, out);
}

std::vector<double> default_sweep_windows() {
  return {3600, 7200, 10800, 14400, 18000};
}

SweepReport run_sweep(const std::map<std::string, EventStream>& streams,
                      const SweepOptions& options) {
  SweepReport report;
  report.options = options;
  const std::vector<double>& windows = options.windows_s;
  std::vector<const EventStream*> eligible;
  for (const auto& [user_id, stream] : streams) {
    if (stream.timestamps.size() < 2)
      report.skipped.push_back({user_id, "insufficient-events"});
    else
      eligible.push_back(&stream);
  }
  report.rows.resize(eligible.size() * windows.size());
  const AnalyzeOptions& ao = options.analysis;
  parallel_for(eligible.size(), ao.threads, [&](std::size_t i) {
    const IntervalSequence seq = intervals_of(*eligible[i]);
    for (std::size_t w = 0; w < windows.size(); ++w) {
      SweepRow& row = report.rows[i * windows.size() + w];
      row.user_id = eligible[i]->user_id;
      row.window_s = windows[w];
      const IntervalSequence cut = truncate(seq, windows[w]);
      row.n_tail = cut.size();
      if (cut.empty()) {
        row.error = "insufficient-events";
        continue;
      }
      try {
        const PowerLawFit fit = fit_intervals(cut, ao.fit_method, ao.xmin);
        row.n_tail = fit.n_tail;
        row.alpha = fit.alpha;
        row.ks_stat = fit.ks_stat;
      } catch (const DegenerateTail&) {
        row.error = "degenerate-tail";
      } catch (const InsufficientEvents&) {
        row.error = "insufficient-events";
      }
    }
  });
  return report;
}

void render_sweep_tsv(const SweepReport& report, std::ostream& out, bool human) {
  out << "# taukit sweep " << kVersion << '\n';
  write_inputs_line(report.inputs, out);
  const AnalyzeOptions& opt = report.options.analysis;
  out << "# dedup: " << to_string(opt.dedup) << '\n';
  out << "# fit: " << to_string(opt.fit_method) << '\n';
  out << "# xmin: " << to_string(opt.xmin) << '\n';
  out << "# windows:";
  for (double w : report.options.windows_s) out << ' ' << format_double(w);
  out << '\n';
  if (opt.seed) out << "# seed: " << *opt.seed << '\n';

  std::vector<std::vector<std::string>> table;
  table.push_back({"user_id", "window_s", "n_tail", "alpha", "ks_stat"});
  for (const SweepRow& row : report.rows) {
    std::vector<std::string> cells;
    cells.push_back(row.user_id);
    cells.push_back(format_double(row.window_s));
    cells.push_back(std::to_string(row.n_tail));
    if (row.alpha) {
      cells.push_back(format_double(*row.alpha));
      cells.push_back(format_double(*row.ks_stat));
    } else {
      cells.push_back(undef(row.error));
      cells.push_back(undef(row.error));
    }
    table.push_back(std::move(cells));
  }
  write_table(table, out, human);
  write_skipped_trailer(report.skipped, out);
}

CcdfExport export_ccdf(const EventStream& stream, bool with_fit,
                       FitMethod method, Xmin xmin) {
  const IntervalSequence seq = intervals_of(stream);
  CcdfExport result;
  result.empirical = empirical_ccdf(seq);
  if (with_fit) {
    const PowerLawFit fit = fit_intervals(seq, method, xmin);
    CcdfPoints model;
    for (const CcdfPoint& point : result.empirical)
      if (point.x >= fit.xmin) model.push_back({point.x, model_ccdf(fit, point.x)});
    result.model = std::move(model);
  }
  return result;
}

}  // namespace taukit
