#include "taukit/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "taukit/errors.hpp"
#include "taukit/text.hpp"

namespace taukit {

namespace {

std::vector<double> sorted_intervals(const IntervalSequence& seq) {
  std::vector<double> v = seq.intervals;
  std::sort(v.begin(), v.end());
  return v;
}

// Index of the first element >= cutoff in a sorted vector.
std::size_t tail_begin(const std::vector<double>& sorted, double cutoff) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), cutoff) - sorted.begin());
}

double ks_over_tail(const std::vector<double>& sorted, std::size_t first,
                    double alpha, double xmin) {
  const std::size_t n = sorted.size();
  const auto n_tail = static_cast<double>(n - first);
  double worst = 0;
  for (std::size_t i = first; i < n; ++i) {
    if (i > first && sorted[i] == sorted[i - 1]) continue;
    const double empirical = static_cast<double>(n - i) / n_tail;
    const double model = std::pow(sorted[i] / xmin, -(alpha - 1.0));
    worst = std::max(worst, std::fabs(empirical - model));
  }
  return worst;
}

PowerLawFit mle_at(const std::vector<double>& sorted, std::size_t first,
                   double xmin) {
  const std::size_t n_tail = sorted.size() - first;
  if (n_tail < 2) {
    throw InsufficientEvents("power-law tail needs at least 2 values");
  }
  double sum_log = 0;
  for (std::size_t i = first; i < sorted.size(); ++i) {
    sum_log += std::log(sorted[i] / xmin);
  }
  if (sum_log <= 0) throw DegenerateTail();
  PowerLawFit fit;
  fit.alpha = 1.0 + static_cast<double>(n_tail) / sum_log;
  fit.xmin = xmin;
  fit.n_tail = n_tail;
  fit.method = FitMethod::mle;
  fit.ks_stat = ks_over_tail(sorted, first, fit.alpha, xmin);
  return fit;
}

PowerLawFit ls_at(const std::vector<double>& sorted, std::size_t first,
                  double xmin) {
  const std::size_t n = sorted.size();
  const std::size_t n_tail = n - first;
  if (n_tail < 2) {
    throw InsufficientEvents("power-law tail needs at least 2 values");
  }
  // Distinct tail points with survival recomputed over the tail.
  std::vector<double> log_x;
  std::vector<double> log_p;
  for (std::size_t i = first; i < n; ++i) {
    if (i > first && sorted[i] == sorted[i - 1]) continue;
    log_x.push_back(std::log(sorted[i]));
    log_p.push_back(
        std::log(static_cast<double>(n - i) / static_cast<double>(n_tail)));
  }
  if (log_x.size() < 2) {
    throw DegenerateTail("need at least 2 distinct tail values");
  }
  double mean_x = 0;
  double mean_p = 0;
  for (std::size_t i = 0; i < log_x.size(); ++i) {
    mean_x += log_x[i];
    mean_p += log_p[i];
  }
  mean_x /= static_cast<double>(log_x.size());
  mean_p /= static_cast<double>(log_x.size());
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < log_x.size(); ++i) {
    sxy += (log_x[i] - mean_x) * (log_p[i] - mean_p);
    sxx += (log_x[i] - mean_x) * (log_x[i] - mean_x);
  }
  PowerLawFit fit;
  fit.alpha = 1.0 - sxy / sxx;
  fit.xmin = xmin;
  fit.n_tail = n_tail;
  fit.method = FitMethod::ccdf_ls;
  fit.ks_stat = ks_over_tail(sorted, first, fit.alpha, xmin);
  return fit;
}

template <typename FitFn>
PowerLawFit fit_with_cutoff(const IntervalSequence& seq, Xmin xmin,
                            FitFn fit_at) {
  if (seq.empty()) throw InsufficientEvents("no intervals");
  const std::vector<double> sorted = sorted_intervals(seq);
  switch (xmin.mode) {
    case Xmin::Mode::smallest:
      return fit_at(sorted, 0, sorted.front());
    case Xmin::Mode::explicit_value: {
      if (!(xmin.value > 0)) throw DomainError("xmin must be positive");
      return fit_at(sorted, tail_begin(sorted, xmin.value), xmin.value);
    }
    case Xmin::Mode::scan:
      break;
  }
  // Scan every distinct value; smallest cutoff wins KS ties.
  bool have_best = false;
  PowerLawFit best;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    try {
      const PowerLawFit candidate = fit_at(sorted, i, sorted[i]);
      if (!have_best || candidate.ks_stat < best.ks_stat) {
        best = candidate;
        have_best = true;
      }
    } catch (const Error&) {
      // Candidate tail too small or degenerate; try the next cutoff.
    }
  }
  if (!have_best) {
    if (sorted.size() < 2) throw InsufficientEvents("no viable cutoff");
    throw DegenerateTail();
  }
  return best;
}

}  // namespace

CcdfPoints empirical_ccdf(const IntervalSequence& seq) {
  if (seq.empty()) throw InsufficientEvents("no intervals");
  const std::vector<double> sorted = sorted_intervals(seq);
  const auto n = static_cast<double>(sorted.size());
  CcdfPoints points;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    points.push_back({sorted[i], static_cast<double>(sorted.size() - i) / n});
  }
  return points;
}

PowerLawFit fit_mle(const IntervalSequence& seq, Xmin xmin) {
  return fit_with_cutoff(seq, xmin, mle_at);
}

PowerLawFit fit_ccdf_ls(const IntervalSequence& seq, Xmin xmin) {
  return fit_with_cutoff(seq, xmin, ls_at);
}

double model_ccdf(const PowerLawFit& fit, double x) {
  if (x < fit.xmin) throw DomainError("x below the fitted cutoff");
  return std::pow(x / fit.xmin, -(fit.alpha - 1.0));
}

double ks_statistic(const IntervalSequence& seq, const PowerLawFit& fit) {
  if (!(fit.xmin > 0)) throw DomainError("fit has no positive cutoff");
  const std::vector<double> sorted = sorted_intervals(seq);
  const std::size_t first = tail_begin(sorted, fit.xmin);
  if (first == sorted.size()) throw InsufficientEvents("empty tail");
  return ks_over_tail(sorted, first, fit.alpha, fit.xmin);
}

void write_ccdf_tsv(const CcdfPoints& points, std::ostream& out) {
  for (const auto& pt : points) {
    out << format_double(pt.x) << '\t' << format_double(pt.p) << '\n';
  }
}

}  // namespace taukit
