#include "holo/sampling.hpp"

#include <cmath>
#include <numbers>

namespace holo {

double Sampler::angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

Complex Sampler::annulus(double r_min, double r_max) {
  const double r = uniform(r_min, r_max);
  return std::polar(r, angle());
}

Point Sampler::domain_point(std::size_t n) {
  Point z(n);
  for (auto& c : z) c = annulus(0.2, 2.0);
  return z;
}

Point Sampler::polydisc_point(std::size_t n, double radius) {
  Point z(n);
  for (auto& c : z) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    c = std::polar(r, angle());
  }
  return z;
}

std::vector<double> Sampler::angles(std::size_t n) {
  std::vector<double> theta(n);
  for (auto& t : theta) t = angle();
  return theta;
}

}  // namespace holo
