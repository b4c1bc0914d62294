#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "taukit/intervals.hpp"

namespace taukit {

enum class FitMethod { mle, ccdf_ls };

// A fitted power-law tail: survival P(X >= x) = (x / xmin)^-(alpha-1)
// for x >= xmin, normalized to 1 at the cutoff. Tail membership is
// inclusive (x >= xmin).
struct PowerLawFit {
  double alpha = 0;       // > 1
  double xmin = 0;        // > 0
  std::size_t n_tail = 0; // intervals >= xmin used by the fit
  double ks_stat = 0;     // sup |empirical - model| over tail points
  FitMethod method = FitMethod::mle;
};

struct CcdfPoint {
  double x = 0;
  double p = 0;  // fraction of values >= x, in (0, 1]
};

// Strictly increasing in x, non-increasing in p, p = 1 at the smallest x.
using CcdfPoints = std::vector<CcdfPoint>;

// Cutoff selection for fitting.
//   smallest  fit the whole distribution from its minimum value (default)
//   at(v)     explicit cutoff in seconds
//   scan      try every distinct value, keep the KS-minimizing cutoff
//             (ties resolve to the smallest cutoff)
struct Xmin {
  enum class Mode { smallest, explicit_value, scan };

  static Xmin smallest() { return {Mode::smallest, 0}; }
  static Xmin at(double v) { return {Mode::explicit_value, v}; }
  static Xmin scan() { return {Mode::scan, 0}; }

  Mode mode = Mode::smallest;
  double value = 0;
};

// One point per distinct interval value; p = (count >= x) / n.
// Throws InsufficientEvents on an empty sequence.
CcdfPoints empirical_ccdf(const IntervalSequence& seq);

// Closed-form continuous-tail maximum-likelihood estimate
//   alpha = 1 + n_tail / sum(log(tau_i / xmin))  over tau_i >= xmin.
// Throws InsufficientEvents if the tail holds fewer than two values and
// DegenerateTail if every tail value equals the cutoff.
PowerLawFit fit_mle(const IntervalSequence& seq, Xmin xmin = Xmin::smallest());

// Cross-check estimator: least-squares slope of log p against log x
// over the empirical CCDF tail points; alpha = 1 - slope. Never the
// default. Throws DegenerateTail with fewer than two distinct tail
// values.
PowerLawFit fit_ccdf_ls(const IntervalSequence& seq, Xmin xmin = Xmin::smallest());

// Model survival at x, normalized so the value at xmin is 1.
// Throws DomainError for x < xmin.
double model_ccdf(const PowerLawFit& fit, double x);

// Max absolute gap between the tail's empirical survival (recomputed
// over tau >= xmin only) and the model survival, evaluated at the
// distinct tail values.
double ks_statistic(const IntervalSequence& seq, const PowerLawFit& fit);

// Two-column TSV `x<TAB>p`, x ascending, round-trip-exact decimals.
void write_ccdf_tsv(const CcdfPoints& points, std::ostream& out);

}  // namespace taukit
