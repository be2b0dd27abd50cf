#pragma once

#include <cstdint>

#include "hyperball/types.hpp"

namespace hyperball {

/// Hit-or-miss volume estimate with its binomial standard error.
struct McEstimate {
  double volume_estimate;  // (hits / samples) * (2r)^n
  double std_error;        // (2r)^n * sqrt(p (1-p) / samples)
  std::int64_t samples;
  std::int64_t hits;
  std::uint64_t seed;
};

/// Hit-or-miss Monte Carlo estimate of the n-ball volume, sampling the
/// bounding cube [-r, r]^n.  The random stream is keyed by (seed, sample
/// index, coordinate index), so the result is a pure function of the
/// arguments: any worker count, including the default, yields bit-identical
/// output.  Requires 1 <= n <= 12 (the hit rate is vacuous beyond that) and
/// samples >= 1000.
McEstimate mc_ball_volume(Dimension n, Radius r, std::int64_t samples,
                          std::uint64_t seed, int workers = 0);

/// Max over all 2^n vertices of the centered unit cube of the deviation
/// | ||v|| - sqrt(n)/2 |.  Enumerates every vertex; requires n <= 20.
double vertex_on_sphere_check(Dimension n);

/// Fraction of uniform samples from the centered unit cube that land inside
/// the ball of circumscribed radius.  Containment is exact, so the fraction
/// is 1.0 for any seed.  Requires 1 <= n <= 50 and samples >= 1000.
double cube_inside_ball_check(Dimension n, std::int64_t samples,
                              std::uint64_t seed);

namespace detail {

/// Value at position `counter` of the counter-based stream for `seed`.
std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t counter);

/// Map 64 random bits to a double in [0, 1).
double unit_from_bits(std::uint64_t bits);

}  // namespace detail

}  // namespace hyperball
