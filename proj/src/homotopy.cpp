#include "holo/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holo/error.hpp"
#include "holo/sampling.hpp"

namespace holo {

double sin_pi(double t) {
  const double u = t > 0.5 ? 1.0 - t : t;
  return std::sin(std::numbers::pi * u);
}

BumpFunction BumpFunction::sine() { return BumpFunction(); }

BumpFunction BumpFunction::table(std::vector<double> values) {
  if (values.size() < 2) fail(ErrorKind::InvalidArgument, "bump table needs at least two values");
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, "bump table value is not finite");
  }
  BumpFunction b;
  b.values_ = std::move(values);
  if (b.values_.front() != 0.0 || b.values_.back() != 0.0) {
    fail(ErrorKind::InvalidArgument, "bump must vanish at t = 0 and t = 1");
  }
  if (b(0.5) == 0.0) fail(ErrorKind::InvalidArgument, "bump must be nonzero at t = 1/2");
  return b;
}

double BumpFunction::operator()(double t) const {
  if (is_sine()) return sin_pi(t);
  const double position = std::clamp(t, 0.0, 1.0) * static_cast<double>(values_.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(position), values_.size() - 2);
  const double frac = position - static_cast<double>(i);
  return (1.0 - frac) * values_[i] + frac * values_[i + 1];
}

TranspositionPath::TranspositionPath(std::size_t n_, std::size_t j_, std::size_t k_, BumpFunction bump_)
    : n(n_), j(j_), k(k_), bump(std::move(bump_)) {
  if (!(1 <= j && j < k && k <= n)) {
    fail(ErrorKind::InvalidAxis, "transposition path needs 1 <= j < k <= n");
  }
}

std::size_t dimension(const HomotopyPath& path) {
  if (const auto* o = std::get_if<OvershearPath>(&path)) return o->target.n();
  return std::get<TranspositionPath>(path).n;
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorKind::OutOfRange, "path time " + std::to_string(t) + " outside [0, 1]");
}

Eigen::MatrixXcd transposition_matrix(const TranspositionPath& p, double t) {
  const auto n = static_cast<Eigen::Index>(p.n);
  const auto j = static_cast<Eigen::Index>(p.j - 1);
  const auto k = static_cast<Eigen::Index>(p.k - 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  m(j, j) = t;
  m(j, k) = 1.0 - t;
  m(k, j) = Complex(1.0 - t, p.bump(t));
  m(k, k) = t;
  return m;
}

}  // namespace

AutomorphismWord path_at(const HomotopyPath& path, double t) {
  check_time(t);
  if (const auto* o = std::get_if<OvershearPath>(&path)) {
    if (t == 1.0) return AutomorphismWord::identity(o->target.n());
    const double s = 1.0 - t;
    return AutomorphismWord(Overshear(o->target.axis, o->target.f.scaled(s), o->target.g.scaled(s)));
  }
  const auto& p = std::get<TranspositionPath>(path);
  return AutomorphismWord(Linear(transposition_matrix(p, t)));
}

AutomorphismWord path_target(const HomotopyPath& path) {
  if (const auto* o = std::get_if<OvershearPath>(&path)) return AutomorphismWord(o->target);
  const auto& p = std::get<TranspositionPath>(path);
  return AutomorphismWord(Permutation::transposition(p.n, p.j, p.k));
}

Complex path_det(const TranspositionPath& path, double t) {
  check_time(t);
  return {2.0 * t - 1.0, -(1.0 - t) * path.bump(t)};
}

PathReport certify_path(const HomotopyPath& path, std::size_t grid_size, double sample_radius, std::uint64_t seed) {
  if (grid_size < 2) fail(ErrorKind::InvalidArgument, "certification grid needs at least two times");
  const std::size_t n = dimension(path);
  Sampler sampler(seed);
  std::vector<Point> points(kPathSamplePoints);
  for (auto& z : points) z = sampler.polydisc_point(n, sample_radius);

  PathReport report{0.0, 0.0, INFINITY, 0.0};
  const AutomorphismWord target = path_target(path);
  const AutomorphismWord start = path_at(path, 0.0);
  const AutomorphismWord end = path_at(path, 1.0);
  for (const auto& z : points) {
    report.endpoint_err0 = std::max(report.endpoint_err0, sup_distance(eval_word(start, z), eval_word(target, z)));
    report.endpoint_err1 = std::max(report.endpoint_err1, sup_distance(eval_word(end, z), z));
  }

  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const AutomorphismWord gamma = path_at(path, t);
    const AutomorphismWord inverse = invert_word(gamma);
    for (const auto& z : points) {
      report.min_abs_det = std::min(report.min_abs_det, std::abs(jacobian_det(gamma, z)));
      const double residual = sup_distance(eval_word(inverse, eval_word(gamma, z)), z);
      report.max_inverse_residual = std::max(report.max_inverse_residual, residual);
    }
  }
  return report;
}

double continuity_modulus(const HomotopyPath& path, double dt, double sample_radius, std::uint64_t seed) {
  if (!(dt > 0.0 && dt <= 1.0)) fail(ErrorKind::OutOfRange, "dt must lie in (0, 1]");
  const std::size_t n = dimension(path);
  Sampler sampler(seed);
  std::vector<Point> points(kPathSamplePoints);
  for (auto& z : points) z = sampler.polydisc_point(n, sample_radius);

  const auto steps = static_cast<std::size_t>(std::ceil(1.0 / dt - 1e-9));
  auto time = [&](std::size_t i) { return std::min(static_cast<double>(i) * dt, 1.0); };
  auto images = [&](double t) {
    const AutomorphismWord gamma = path_at(path, t);
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& z : points) out.push_back(eval_word(gamma, z));
    return out;
  };

  double modulus = 0.0;
  std::vector<Point> previous = images(time(0));
  for (std::size_t i = 1; i <= steps; ++i) {
    std::vector<Point> current = images(time(i));
    for (std::size_t p = 0; p < points.size(); ++p) {
      modulus = std::max(modulus, sup_distance(previous[p], current[p]));
    }
    previous = std::move(current);
  }
  return modulus;
}

}  // namespace holo
