#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "holo/types.hpp"
#include "holo/word.hpp"

namespace holo {

/// Real continuous function on [0, 1] with f(0) = f(1) = 0 and f(1/2) != 0.
/// Either t -> sin(pi t) or a table of values on a uniform grid, linearly
/// interpolated.
class BumpFunction {
 public:
  static BumpFunction sine();
  static BumpFunction table(std::vector<double> values);

  bool is_sine() const noexcept { return values_.empty(); }
  const std::vector<double>& values() const noexcept { return values_; }

  double operator()(double t) const;

  friend bool operator==(const BumpFunction&, const BumpFunction&) = default;

 private:
  BumpFunction() = default;
  std::vector<double> values_;
};

/// sin(pi t) for t in [0, 1], exact at t = 0, 1/2 and 1.
double sin_pi(double t);

/// t -> Overshear(axis, (1 - t) f, (1 - t) g): the target at t = 0 and the
/// identity at t = 1.
struct OvershearPath {
  Overshear target;
};

/// t -> linear map on the (z_j, z_k) plane
///   z_j' = (1 - t) z_k + t z_j,  z_k' = t z_k + ((1 - t) + i bump(t)) z_j,
/// the transposition of z_j and z_k at t = 0 and the identity at t = 1.
struct TranspositionPath {
  TranspositionPath(std::size_t n, std::size_t j, std::size_t k, BumpFunction bump = BumpFunction::sine());

  std::size_t n;
  std::size_t j;
  std::size_t k;
  BumpFunction bump;
};

using HomotopyPath = std::variant<OvershearPath, TranspositionPath>;

std::size_t dimension(const HomotopyPath& path);

/// gamma(t) as a word; throws OutOfRange for t outside [0, 1].
AutomorphismWord path_at(const HomotopyPath& path, double t);

/// The map the path starts from, gamma(0).
AutomorphismWord path_target(const HomotopyPath& path);

/// Closed-form determinant (2t - 1) - i (1 - t) bump(t) of the (j, k) block.
Complex path_det(const TranspositionPath& path, double t);

struct PathReport {
  double endpoint_err0;
  double endpoint_err1;
  double min_abs_det;
  double max_inverse_residual;
};

inline constexpr std::size_t kPathSamplePoints = 100;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Evaluates the path on a uniform grid of `grid_size` times against seeded
/// points of the closed polydisc of radius `sample_radius`.
PathReport certify_path(const HomotopyPath& path, std::size_t grid_size, double sample_radius,
                        std::uint64_t seed = kDefaultSeed);

/// max over consecutive grid times (t, t + dt) of the sup-norm distance
/// between gamma(t) and gamma(t + dt) on seeded polydisc points.
double continuity_modulus(const HomotopyPath& path, double dt, double sample_radius,
                          std::uint64_t seed = kDefaultSeed);

}  // namespace holo
