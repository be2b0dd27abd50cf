#include "hyperball/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "hyperball/geometry.hpp"

namespace hyperball {

ConvergenceReport convergence_scan(const std::vector<Dimension>& dims) {
  std::vector<std::int64_t> ns;
  ns.reserve(dims.size());
  for (const Dimension& d : dims) ns.push_back(d.value());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.size() < 3)
    throw std::domain_error(
        "convergence_scan: needs at least 3 distinct dimensions");
  if (ns.front() < 3)
    throw std::domain_error("convergence_scan: every dimension must be >= 3");

  const double limit = growth_limit().value();
  ConvergenceReport report;
  report.rows.reserve(ns.size());
  for (std::int64_t n : ns) {
    const double g = growth_ratio(Dimension(n)).value();
    report.rows.push_back({n, g, std::fabs(g - limit)});
  }

  // Least-squares slope of ln(abs_error) against ln(n): the empirical decay
  // order of the gap to the limit.
  const double m = static_cast<double>(report.rows.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const ConvergenceRow& row : report.rows) {
    mean_x += std::log(static_cast<double>(row.n));
    mean_y += std::log(row.abs_error);
  }
  mean_x /= m;
  mean_y /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const ConvergenceRow& row : report.rows) {
    const double dx = std::log(static_cast<double>(row.n)) - mean_x;
    const double dy = std::log(row.abs_error) - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
  }
  report.fitted_order = sxy / sxx;

  const ConvergenceRow& last = report.rows.back();
  report.fitted_constant = static_cast<double>(last.n) * (limit - last.g);
  return report;
}

PeakResult peak_dimension(Radius r, Dimension n_max) {
  if (n_max.value() < 2)
    throw std::domain_error("peak_dimension: n_max must be >= 2");
  std::int64_t best_n = 1;
  double best = log_ball_volume(Dimension(1), r).log();
  for (std::int64_t n = 2; n <= n_max.value(); ++n) {
    const double lv = log_ball_volume(Dimension(n), r).log();
    if (lv > best) {  // strict: ties keep the smaller dimension
      best = lv;
      best_n = n;
    }
  }
  return {r, best_n, best, best_n == n_max.value()};
}

}  // namespace hyperball
