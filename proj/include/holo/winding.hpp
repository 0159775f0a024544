#pragma once

#include "holo/domain.hpp"
#include "holo/types.hpp"
#include "holo/word.hpp"

namespace holo {

/// Circle z_s = R e^{i theta} inside the complex line through `base_point`
/// orthogonal to {z_s = 0}; the remaining coordinates stay frozen at the
/// base point.
class ContourSpec {
 public:
  const DomainSpec& domain() const noexcept { return domain_; }
  std::size_t axis() const noexcept { return axis_; }
  const Point& base_point() const noexcept { return base_point_; }
  double radius() const noexcept { return radius_; }

  Point at(double theta) const;

 private:
  friend ContourSpec make_contour(const DomainSpec&, std::size_t, Point, double);
  ContourSpec(DomainSpec d, std::size_t axis, Point p, double radius);

  DomainSpec domain_;
  std::size_t axis_;
  Point base_point_;
  double radius_;
};

ContourSpec make_contour(const DomainSpec& d, std::size_t axis, Point p, double radius);

struct IndexResult {
  long index;
  double raw;
  std::size_t samples_used;
};

inline constexpr std::size_t kInitialContourSamples = 64;
inline constexpr std::size_t kContourSampleBudget = std::size_t{1} << 20;
inline constexpr double kZeroOnContour = 1e-13;
inline constexpr double kIntegralityTolerance = 1e-6;

/// Winding number of theta -> w_s(contour(theta)) about 0, by continuous
/// argument tracking with adaptive bisection until every increment is below
/// pi/2.
IndexResult winding_index(const AutomorphismWord& w, const ContourSpec& c);

/// Membership in the component of automorphisms with negative index.
bool in_negative_component(const AutomorphismWord& w, const ContourSpec& c);

}  // namespace holo
