#include "hyperball/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "hyperball/geometry.hpp"

namespace hyperball {

namespace detail {

std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t counter) {
  // splitmix64 finalizer applied at an arbitrary stream position; random
  // access by counter is what makes the estimate partition-independent.
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

namespace {

std::int64_t ball_hits(std::int64_t n, double r, std::uint64_t seed,
                       std::int64_t first, std::int64_t last) {
  const double r2 = r * r;
  std::int64_t hits = 0;
  for (std::int64_t i = first; i < last; ++i) {
    const std::uint64_t base =
        static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n);
    double s = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
      const double u = detail::unit_from_bits(detail::stream_draw(seed, base + j));
      const double x = (2.0 * u - 1.0) * r;
      s += x * x;
    }
    if (s <= r2) ++hits;
  }
  return hits;
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
}

}  // namespace

McEstimate mc_ball_volume(Dimension n, Radius r, std::int64_t samples,
                          std::uint64_t seed, int workers) {
  const std::int64_t nn = n.value();
  if (nn > 12)
    throw std::domain_error("mc_ball_volume: dimension capped at 12");
  if (samples < 1000)
    throw std::domain_error("mc_ball_volume: needs at least 1000 samples");

  const int w = resolve_workers(workers);
  std::int64_t hits = 0;
  if (w == 1) {
    hits = ball_hits(nn, r.value(), seed, 0, samples);
  } else {
    // Contiguous sample ranges per worker; hit counts are integers, so the
    // total is identical however the range is split.
    std::vector<std::int64_t> partial(static_cast<std::size_t>(w), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    const std::int64_t chunk = samples / w;
    const std::int64_t rem = samples % w;
    std::int64_t first = 0;
    for (int t = 0; t < w; ++t) {
      const std::int64_t last = first + chunk + (t < rem ? 1 : 0);
      pool.emplace_back([&partial, t, nn, seed, first, last, &r] {
        partial[static_cast<std::size_t>(t)] =
            ball_hits(nn, r.value(), seed, first, last);
      });
      first = last;
    }
    for (std::thread& th : pool) th.join();
    for (std::int64_t h : partial) hits += h;
  }

  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double cube = std::pow(2.0 * r.value(), static_cast<double>(nn));
  McEstimate est;
  est.volume_estimate = p * cube;
  est.std_error = cube * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.samples = samples;
  est.hits = hits;
  est.seed = seed;
  return est;
}

double vertex_on_sphere_check(Dimension n) {
  const std::int64_t nn = n.value();
  if (nn > 20)
    throw std::domain_error("vertex_on_sphere_check: vertex count is 2^n, capped at n = 20");
  const double target = circumscribed_radius(n).value();
  double worst = 0.0;
  for (std::uint64_t mask = 0; mask < (1ull << nn); ++mask) {
    double s = 0.0;
    for (std::int64_t j = 0; j < nn; ++j) {
      const double c = ((mask >> j) & 1u) ? 0.5 : -0.5;
      s += c * c;
    }
    worst = std::max(worst, std::fabs(std::sqrt(s) - target));
  }
  return worst;
}

double cube_inside_ball_check(Dimension n, std::int64_t samples,
                              std::uint64_t seed) {
  const std::int64_t nn = n.value();
  if (nn > 50)
    throw std::domain_error("cube_inside_ball_check: dimension capped at 50");
  if (samples < 1000)
    throw std::domain_error("cube_inside_ball_check: needs at least 1000 samples");
  const double radius = circumscribed_radius(n).value();
  std::int64_t inside = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const std::uint64_t base =
        static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(nn);
    double s = 0.0;
    for (std::int64_t j = 0; j < nn; ++j) {
      const double x =
          detail::unit_from_bits(detail::stream_draw(seed, base + j)) - 0.5;
      s += x * x;
    }
    if (std::sqrt(s) <= radius) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace hyperball
