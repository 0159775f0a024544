#pragma once

#include <cstdint>
#include <random>

#include "holo/types.hpp"

namespace holo {

/// Seeded source of the sample points used by every randomized check.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double angle();
  /// r * e^{i theta}, r uniform in [r_min, r_max], theta uniform.
  Complex annulus(double r_min, double r_max);
  /// Point with every coordinate in the annulus 0.2 <= |z_j| <= 2.
  Point domain_point(std::size_t n);
  /// Uniform point of the closed polydisc of the given radius.
  Point polydisc_point(std::size_t n, double radius);
  std::vector<double> angles(std::size_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace holo
