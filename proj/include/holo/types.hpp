#pragma once

#include <complex>
#include <span>
#include <vector>

namespace holo {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;
using PointView = std::span<const Complex>;

/// Sup-norm distance between two points of equal length.
double sup_distance(PointView a, PointView b);

}  // namespace holo
