#pragma once

#include <cstdint>

#include "hyperball/types.hpp"

namespace hyperball {

/// Radius of the sphere through all vertices of the centered unit cube in
/// n dimensions: sqrt(n)/2, the half-diagonal.
Radius circumscribed_radius(Dimension n);

/// ln V_n(r) through the closed form (n/2) ln pi + n ln r - ln Gamma(n/2+1).
/// Valid for every n >= 1 and finite far beyond n = 1e8.
LogVolume log_ball_volume(Dimension n, Radius r);

/// ln V_n(r) as the explicit product
///   (2 pi r^n / n) * prod_{k=1}^{n-2} sqrt(pi) Gamma((k+1)/2) / Gamma(1+k/2),
/// accumulated term by term in log space.  Defined only for n >= 3.  This
/// is deliberately kept as an independent route from log_ball_volume: the
/// two are cross-checked against each other, so they must never be merged.
LogVolume log_ball_volume_product(Dimension n, Radius r);

/// Volume of the unit hypercube: exactly 1 in every dimension.
double cube_volume(Dimension n);

/// g_n = V_{n+1}(R_{n+1}) / V_n(R_n) with R_m = sqrt(m)/2 the circumscribed
/// radius, computed as the exponential of the difference of closed-form log
/// volumes carried in extended precision, which keeps consecutive ratios
/// strictly ordered out to n = 1e5 and beyond.
GrowthRatio growth_ratio(Dimension n);

/// The same family of ratios through the literal closed-form expression
///   (n^{n/2-1} / 2) (n-1)^{(3-n)/2} sqrt(pi) Gamma((n-1)/2) / Gamma(n/2),
/// which indexes as V_n / V_{n-1}: growth_ratio(n-1) reaches the same value
/// by dividing volumes.  Requires n >= 3.  Kept separate from growth_ratio
/// so the two routes stay independently checkable.
GrowthRatio growth_ratio_formula(Dimension n);

/// growth_ratio_formula continued to real arguments nu > 2; agrees with it
/// bit for bit at integer nu.
GrowthRatio continuous_ratio(RealDimension nu);

/// Large-n limit of the circumscribed growth ratio: sqrt(pi e / 2).
GrowthRatio growth_limit();

namespace detail {

/// Closed-form ln V_n(r) in extended precision.
long double log_ball_volume_ld(std::int64_t n, double r);

/// ln of the literal ratio expression at real argument nu > 2.
long double log_formula_ratio_ld(long double nu);

}  // namespace detail

}  // namespace hyperball
