#pragma once

#include <cstdint>
#include <vector>

#include "hyperball/types.hpp"

namespace hyperball {

struct ConvergenceRow {
  std::int64_t n;
  double g;          // growth_ratio at n
  double abs_error;  // |g - growth_limit()|
};

/// Empirical approach of the growth ratio to its limit.
struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // strictly increasing n
  double fitted_order;     // least-squares slope of ln(abs_error) vs ln(n)
  double fitted_constant;  // n * (limit - g) at the largest scanned n
};

/// Evaluates the growth ratio on the given dimensions (deduplicated and
/// sorted ascending) and fits the decay of the error to the limit.  Needs
/// at least three distinct dimensions, every one of them >= 3.
ConvergenceReport convergence_scan(const std::vector<Dimension>& dims);

struct PeakResult {
  Radius r;
  std::int64_t peak_n;  // smallest maximizer of log_ball_volume(n, r)
  double log_v_peak;
  bool truncated;       // peak sits at n_max, so the window may be too small
};

/// Scans n = 1..n_max for the dimension maximizing the ball volume at a
/// fixed radius; ties resolve to the smaller n.  n_max must be >= 2.
PeakResult peak_dimension(Radius r, Dimension n_max);

}  // namespace hyperball
