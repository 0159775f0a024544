#include "holo/torus.hpp"

#include <cmath>
#include <sstream>

#include "holo/error.hpp"
#include "holo/sampling.hpp"

namespace holo {

std::int64_t integer_determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty exponent matrix");
  std::vector<std::vector<__int128>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_dimension(n, a[i].size(), "exponent matrix row");
    m[i].assign(a[i].begin(), a[i].end());
  }
  int sign = 1;
  __int128 previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division: Bareiss' identity guarantees divisibility.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous_pivot;
      }
      m[i][k] = 0;
    }
    previous_pivot = m[k][k];
  }
  return static_cast<std::int64_t>(sign * m[n - 1][n - 1]);
}

int validate_exponent_matrix(const IntMatrix& a) {
  const std::int64_t det = integer_determinant(a);
  if (det != 1 && det != -1) throw NotUnimodularError(det);
  return static_cast<int>(det);
}

ExponentMatrix::ExponentMatrix(IntMatrix a) : a_(std::move(a)), det_(validate_exponent_matrix(a_)) {}

ExponentMatrix ExponentMatrix::identity(std::size_t n) {
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return ExponentMatrix(std::move(a));
}

Point apply_torus(const ExponentMatrix& a, const TorusElement& t, PointView z) {
  require_dimension(a.n(), t.theta.size(), "torus angles");
  require_dimension(a.n(), z.size(), "apply_torus");
  Point out(z.size());
  for (std::size_t j = 0; j < a.n(); ++j) {
    double phase = 0.0;
    for (std::size_t k = 0; k < a.n(); ++k) phase += static_cast<double>(a.entries()[j][k]) * t.theta[k];
    out[j] = std::polar(1.0, phase) * z[j];
  }
  return out;
}

CommutationVerdict commutes_with_torus(const AutomorphismWord& w, const DomainSpec& d, std::uint64_t seed) {
  require_dimension(d.n(), w.n(), "commutes_with_torus");
  const auto preserved = word_preserves_domain(w, d, seed);
  if (!preserved.preserves) fail(ErrorKind::OutsideDomain, "word does not preserve the domain");

  const auto torus = ExponentMatrix::identity(d.n());
  Sampler sampler(seed);
  std::vector<TorusElement> rotations(kTorusTrials);
  for (auto& t : rotations) t.theta = sampler.angles(d.n());
  std::vector<Point> points(kTorusPoints);
  for (auto& z : points) z = sampler.domain_point(d.n());

  CommutationVerdict verdict{true, 0.0, std::nullopt};
  std::size_t worst_t = 0;
  std::size_t worst_z = 0;
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      const Point lhs = eval_word(w, apply_torus(torus, rotations[i], points[k]));
      const Point rhs = apply_torus(torus, rotations[i], eval_word(w, points[k]));
      const double deviation = sup_distance(lhs, rhs);
      if (deviation > verdict.max_deviation || std::isnan(deviation)) {
        verdict.max_deviation = std::isnan(deviation) ? INFINITY : deviation;
        worst_t = i;
        worst_z = k;
      }
    }
  }
  if (!(verdict.max_deviation < kCommutationThreshold)) {
    verdict.commutes = false;
    verdict.witness = CommutationWitness{rotations[worst_t].theta, points[worst_z], verdict.max_deviation};
  }
  return verdict;
}

namespace {

[[noreturn]] void not_diagonal(PointView q, const std::string& why) {
  std::ostringstream msg;
  msg << why << " at (";
  for (std::size_t i = 0; i < q.size(); ++i) msg << (i ? ", " : "") << q[i];
  msg << ")";
  fail(ErrorKind::NotDiagonal, msg.str());
}

}  // namespace

Point extract_diagonal(const AutomorphismWord& w, const DomainSpec& d, std::uint64_t seed) {
  require_dimension(d.n(), w.n(), "extract_diagonal");
  const std::size_t n = d.n();
  Sampler sampler(seed);

  // Dyadic base point: dividing by it undoes a multiplication exactly.
  static constexpr Complex kUnits[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  std::uniform_int_distribution<int> pick(0, 7);
  Point p(n);
  for (auto& c : p) {
    const int r = pick(sampler.engine());
    c = kUnits[r % 4] * (r < 4 ? 1.0 : 0.5);
  }
  const Point wp = eval_word(w, p);
  Point lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = wp[j] / p[j];

  for (std::size_t trial = 0; trial < kDiagonalCheckPoints; ++trial) {
    const Point q = sampler.domain_point(n);
    const Point wq = eval_word(w, q);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(std::abs(wq[j] / q[j] - lambda[j]) < kRatioTolerance)) not_diagonal(q, "ratio w_j/z_j is not constant");
    }
    for (std::size_t k = 0; k < n; ++k) {
      Point moved = q;
      moved[k] *= sampler.annulus(0.5, 1.5);
      const Point wm = eval_word(w, moved);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && !(std::abs(wm[j] - wq[j]) < kDependenceTolerance)) {
          not_diagonal(q, "w_j depends on z_k for k != j");
        }
      }
    }
  }
  return lambda;
}

}  // namespace holo
