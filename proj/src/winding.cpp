#include "holo/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holo/error.hpp"

namespace holo {

ContourSpec::ContourSpec(DomainSpec d, std::size_t axis, Point p, double radius)
    : domain_(std::move(d)), axis_(axis), base_point_(std::move(p)), radius_(radius) {}

Point ContourSpec::at(double theta) const {
  Point z = base_point_;
  z[axis_ - 1] = std::polar(radius_, theta);
  return z;
}

ContourSpec make_contour(const DomainSpec& d, std::size_t axis, Point p, double radius) {
  if (d.kind() != DomainKind::HyperplaneComplement) {
    fail(ErrorKind::InvalidArgument, "contours are defined on hyperplane complements only");
  }
  if (!d.deletes(axis)) fail(ErrorKind::InvalidAxis, "axis " + std::to_string(axis) + " is not a deleted hyperplane");
  require_dimension(d.n(), p.size(), "contour base point");
  if (!contains(d, p)) fail(ErrorKind::OutsideDomain, "contour base point is not in the domain");
  if (!(radius > 0.0) || !std::isfinite(radius)) fail(ErrorKind::InvalidArgument, "contour radius must be positive");
  return ContourSpec(d, axis, std::move(p), radius);
}

namespace {

struct Sample {
  double theta;
  Complex value;
};

}  // namespace

IndexResult winding_index(const AutomorphismWord& w, const ContourSpec& c) {
  require_dimension(c.domain().n(), w.n(), "winding_index");
  const std::size_t s = c.axis() - 1;
  std::size_t samples = 0;

  auto sample = [&](double theta) {
    const Complex v = eval_word(w, c.at(theta))[s];
    ++samples;
    if (!(std::abs(v) >= kZeroOnContour)) {
      fail(ErrorKind::ZeroOnContour, "|w_s| below threshold at theta = " + std::to_string(theta));
    }
    return Sample{theta, v};
  };

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  constexpr double kMaxIncrement = std::numbers::pi / 2.0;

  std::vector<std::pair<Sample, Sample>> work;
  const Sample first = sample(0.0);
  Sample previous = first;
  for (std::size_t k = 1; k <= kInitialContourSamples; ++k) {
    // The closing node reuses the value at theta = 0.
    const Sample next = k == kInitialContourSamples ? Sample{kTwoPi, first.value}
                                                    : sample(kTwoPi * static_cast<double>(k) / kInitialContourSamples);
    work.emplace_back(previous, next);
    previous = next;
  }
  // Depth-first over a fixed ordering keeps the summation deterministic.
  std::reverse(work.begin(), work.end());

  double total = 0.0;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const double increment = std::arg(b.value / a.value);
    if (std::abs(increment) < kMaxIncrement) {
      total += increment;
      continue;
    }
    if (samples >= kContourSampleBudget) {
      fail(ErrorKind::BudgetExhausted, "argument refinement did not converge within the sample budget");
    }
    const Sample mid = sample(0.5 * (a.theta + b.theta));
    work.emplace_back(mid, b);
    work.emplace_back(a, mid);
  }

  const double raw = total / kTwoPi;
  return {std::lround(raw), raw, samples};
}

bool in_negative_component(const AutomorphismWord& w, const ContourSpec& c) { return winding_index(w, c).index < 0; }

}  // namespace holo
