#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hyperball {

/// Integer spatial dimension, n >= 1.
class Dimension {
 public:
  explicit Dimension(std::int64_t n) : n_(n) {
    if (n < 1) throw std::domain_error("Dimension: n must be a positive integer");
  }
  std::int64_t value() const { return n_; }

 private:
  std::int64_t n_;
};

/// Real-valued dimension for sweeps over non-integer n; requires nu > 2.
class RealDimension {
 public:
  explicit RealDimension(double nu) : nu_(nu) {
    if (!(nu > 2.0) || !std::isfinite(nu))
      throw std::domain_error("RealDimension: nu must be finite and > 2");
  }
  double value() const { return nu_; }

 private:
  double nu_;
};

/// Sphere radius in length units; positive and finite.
class Radius {
 public:
  explicit Radius(double r) : r_(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::domain_error("Radius: r must be finite and > 0");
  }
  double value() const { return r_; }

 private:
  double r_;
};

/// Natural log of an n-ball volume (implicit units length^n).  The linear
/// value can fall outside double range, so it is materialized only on
/// request; the log itself is finite for every valid (n, r).
class LogVolume {
 public:
  explicit LogVolume(double log_v) : log_v_(log_v) {
    if (!std::isfinite(log_v))
      throw std::domain_error("LogVolume: log volume must be finite");
  }
  double log() const { return log_v_; }
  /// exp(log()); may underflow to 0 or overflow to +inf.
  double linear() const { return std::exp(log_v_); }

 private:
  double log_v_;
};

/// Dimensionless ratio of consecutive ball volumes; strictly positive.
class GrowthRatio {
 public:
  explicit GrowthRatio(double g) : g_(g) {
    if (!(g > 0.0) || !std::isfinite(g))
      throw std::domain_error("GrowthRatio: g must be finite and > 0");
  }
  double value() const { return g_; }

 private:
  double g_;
};

}  // namespace hyperball
