#include "hyperball/geometry.hpp"

#include <cmath>
#include <numbers>

#include "hyperball/specfun.hpp"

namespace hyperball {

namespace {

constexpr long double kLogPi =
    1.14472988584940017414342735135305871164729481291531L;
constexpr long double kLog2 =
    0.69314718055994530941723212145817656807550013436026L;
constexpr long double kLog2Pi =
    1.83787706640934548356065947281123527972279494727556L;

}  // namespace

namespace detail {

long double log_ball_volume_ld(std::int64_t n, double r) {
  const long double half_n = 0.5L * static_cast<long double>(n);
  return half_n * kLogPi + static_cast<long double>(n) * logl(r) -
         log_gamma_ld(half_n + 1.0L);
}

long double log_formula_ratio_ld(long double nu) {
  return (0.5L * nu - 1.0L) * logl(nu) +
         0.5L * (3.0L - nu) * logl(nu - 1.0L) + 0.5L * kLogPi +
         log_gamma_half_step_ld(0.5L * (nu - 1.0L)) - kLog2;
}

}  // namespace detail

Radius circumscribed_radius(Dimension n) {
  return Radius(std::sqrt(static_cast<double>(n.value())) / 2.0);
}

LogVolume log_ball_volume(Dimension n, Radius r) {
  return LogVolume(
      static_cast<double>(detail::log_ball_volume_ld(n.value(), r.value())));
}

LogVolume log_ball_volume_product(Dimension n, Radius r) {
  const std::int64_t nn = n.value();
  if (nn < 3)
    throw std::domain_error("log_ball_volume_product: product form needs n >= 3");
  // Consecutive factors share a log-gamma value -- the denominator of term
  // k is the numerator of term k+1 -- so each one is evaluated once and
  // reused; the running sum is carried in extended precision.
  constexpr long double kHalfLogPi = 0.5L * kLogPi;
  long double sum = 0.0L;
  double lg_hi = log_gamma(RealArg(1.0));  // ln Gamma((k+1)/2) at k = 1
  for (std::int64_t k = 1; k <= nn - 2; ++k) {
    const double lg_lo = log_gamma(RealArg(1.0 + 0.5 * static_cast<double>(k)));
    sum += kHalfLogPi + (static_cast<long double>(lg_hi) - lg_lo);
    lg_hi = lg_lo;
  }
  const long double lead = kLog2Pi +
                           static_cast<long double>(nn) * logl(r.value()) -
                           logl(static_cast<long double>(nn));
  return LogVolume(static_cast<double>(lead + sum));
}

double cube_volume(Dimension) { return 1.0; }

GrowthRatio growth_ratio(Dimension n) {
  const std::int64_t m = n.value();
  const double r_lo = circumscribed_radius(n).value();
  const double r_hi = circumscribed_radius(Dimension(m + 1)).value();
  // The log volumes agree to ~L/(2n) for large n; differencing in extended
  // precision keeps the ratio strictly monotone out past n = 1e5.
  return GrowthRatio(static_cast<double>(
      expl(detail::log_ball_volume_ld(m + 1, r_hi) -
           detail::log_ball_volume_ld(m, r_lo))));
}

GrowthRatio growth_ratio_formula(Dimension n) {
  if (n.value() < 3)
    throw std::domain_error("growth_ratio_formula: needs n >= 3");
  return GrowthRatio(static_cast<double>(
      expl(detail::log_formula_ratio_ld(static_cast<long double>(n.value())))));
}

GrowthRatio continuous_ratio(RealDimension nu) {
  return GrowthRatio(static_cast<double>(
      expl(detail::log_formula_ratio_ld(static_cast<long double>(nu.value())))));
}

GrowthRatio growth_limit() {
  constexpr long double pe =
      std::numbers::pi_v<long double> * std::numbers::e_v<long double>;
  return GrowthRatio(static_cast<double>(sqrtl(pe / 2.0L)));
}

}  // namespace hyperball
