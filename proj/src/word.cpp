#include "holo/word.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "holo/error.hpp"

namespace holo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_axis(std::size_t axis, std::size_t n) {
  if (axis < 1 || axis > n) {
    fail(ErrorKind::InvalidAxis, "axis " + std::to_string(axis) + " outside 1.." + std::to_string(n));
  }
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Overshear::Overshear(std::size_t axis_, Polynomial f_, Polynomial g_)
    : axis(axis_), f(std::move(f_)), g(std::move(g_)) {
  require_dimension(f.n_vars(), g.n_vars(), "overshear data");
  check_axis(axis, f.n_vars());
  if (f.references(axis - 1) || g.references(axis - 1)) {
    fail(ErrorKind::InvalidArgument, "overshear data must not depend on the overshear axis");
  }
}

Permutation::Permutation(std::vector<std::size_t> perm_) : perm(std::move(perm_)) {
  if (perm.empty()) fail(ErrorKind::InvalidArgument, "empty permutation");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p < 1 || p > perm.size() || seen[p - 1]) fail(ErrorKind::InvalidArgument, "not a bijection of 1..n");
    seen[p - 1] = true;
  }
}

Permutation Permutation::transposition(std::size_t n, std::size_t j, std::size_t k) {
  check_axis(j, n);
  check_axis(k, n);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{1});
  std::swap(p[j - 1], p[k - 1]);
  return Permutation(std::move(p));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != i + 1) return false;
  }
  return true;
}

int Permutation::sign() const {
  // Parity from the cycle decomposition.
  std::vector<bool> visited(perm.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !visited[j]; j = perm[j] - 1) {
      visited[j] = true;
      ++length;
    }
    if (length % 2 == 0) s = -s;
  }
  return s;
}

Diagonal::Diagonal(Point lambda_) : lambda(std::move(lambda_)) {
  if (lambda.empty()) fail(ErrorKind::InvalidArgument, "empty diagonal");
  for (auto l : lambda) {
    if (l == Complex(0.0) || !finite(l)) fail(ErrorKind::InvalidArgument, "diagonal entries must be finite and nonzero");
  }
}

double scaled_determinant(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd scaled = m;
  for (Eigen::Index r = 0; r < scaled.rows(); ++r) {
    const double norm = scaled.row(r).norm();
    if (norm == 0.0) return 0.0;
    scaled.row(r) /= norm;
  }
  return std::abs(scaled.determinant());
}

Linear::Linear(Eigen::MatrixXcd matrix_) : matrix(std::move(matrix_)) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) fail(ErrorKind::InvalidArgument, "linear step needs a square matrix");
  if (!matrix.allFinite()) fail(ErrorKind::InvalidArgument, "linear step matrix is not finite");
  if (!(scaled_determinant(matrix) > kLinearDetTolerance)) {
    fail(ErrorKind::NonInvertibleStep, "linear step is singular");
  }
}

Inversion::Inversion(std::size_t n, std::size_t axis_) : dim(n), axis(axis_) { check_axis(axis, n); }

std::size_t dimension(const GeneratorStep& step) {
  return std::visit([](const auto& s) { return s.n(); }, step);
}

Point apply_step(const GeneratorStep& step, PointView z) {
  require_dimension(dimension(step), z.size(), "step evaluation");
  Point out(z.begin(), z.end());
  std::visit(overloaded{
                 [&](const Overshear& s) {
                   const std::size_t a = s.axis - 1;
                   out[a] = s.f(z) + std::exp(s.g(z)) * z[a];
                 },
                 [&](const Permutation& s) {
                   for (std::size_t i = 0; i < z.size(); ++i) out[s.perm[i] - 1] = z[i];
                 },
                 [&](const Diagonal& s) {
                   for (std::size_t i = 0; i < z.size(); ++i) out[i] = s.lambda[i] * z[i];
                 },
                 [&](const Linear& s) {
                   const Eigen::Map<const Eigen::VectorXcd> v(z.data(), static_cast<Eigen::Index>(z.size()));
                   const Eigen::VectorXcd w = s.matrix * v;
                   std::copy(w.data(), w.data() + w.size(), out.begin());
                 },
                 [&](const Inversion& s) {
                   const std::size_t a = s.axis - 1;
                   if (z[a] == Complex(0.0)) {
                     fail(ErrorKind::SingularPoint, "inversion of z_" + std::to_string(s.axis) + " at 0");
                   }
                   out[a] = 1.0 / z[a];
                 },
             },
             step);
  return out;
}

Complex step_jacobian_det(const GeneratorStep& step, PointView z) {
  require_dimension(dimension(step), z.size(), "step Jacobian");
  return std::visit(overloaded{
                        [&](const Overshear& s) -> Complex { return std::exp(s.g(z)); },
                        [&](const Permutation& s) -> Complex { return static_cast<double>(s.sign()); },
                        [&](const Diagonal& s) -> Complex {
                          Complex prod = 1.0;
                          for (auto l : s.lambda) prod *= l;
                          return prod;
                        },
                        [&](const Linear& s) -> Complex { return s.matrix.determinant(); },
                        [&](const Inversion& s) -> Complex {
                          const Complex v = z[s.axis - 1];
                          if (v == Complex(0.0)) {
                            fail(ErrorKind::SingularPoint, "inversion of z_" + std::to_string(s.axis) + " at 0");
                          }
                          return -1.0 / (v * v);
                        },
                    },
                    step);
}

std::vector<GeneratorStep> invert_step(const GeneratorStep& step) {
  return std::visit(overloaded{
                        [](const Overshear& s) -> std::vector<GeneratorStep> {
                          // z_a -> (z_a - f) * exp(-g), split into a shear and a pure scaling.
                          const Polynomial zero(s.n());
                          std::vector<GeneratorStep> out;
                          if (!s.f.is_zero()) out.emplace_back(Overshear(s.axis, -s.f, zero));
                          if (!s.g.is_zero()) out.emplace_back(Overshear(s.axis, zero, -s.g));
                          if (out.empty()) out.emplace_back(s);
                          return out;
                        },
                        [](const Permutation& s) -> std::vector<GeneratorStep> {
                          std::vector<std::size_t> inv(s.perm.size());
                          for (std::size_t i = 0; i < s.perm.size(); ++i) inv[s.perm[i] - 1] = i + 1;
                          return {Permutation(std::move(inv))};
                        },
                        [](const Diagonal& s) -> std::vector<GeneratorStep> {
                          Point inv(s.lambda.size());
                          std::transform(s.lambda.begin(), s.lambda.end(), inv.begin(),
                                         [](Complex l) { return 1.0 / l; });
                          return {Diagonal(std::move(inv))};
                        },
                        [](const Linear& s) -> std::vector<GeneratorStep> {
                          if (!(scaled_determinant(s.matrix) > kLinearDetTolerance)) {
                            fail(ErrorKind::NonInvertibleStep, "linear step is singular");
                          }
                          return {Linear(s.matrix.partialPivLu().inverse())};
                        },
                        [](const Inversion& s) -> std::vector<GeneratorStep> { return {s}; },
                    },
                    step);
}

AutomorphismWord::AutomorphismWord(std::size_t n) : n_(n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "dimension must be positive");
}

AutomorphismWord::AutomorphismWord(std::size_t n, std::vector<GeneratorStep> steps) : AutomorphismWord(n) {
  for (auto& s : steps) then(std::move(s));
}

AutomorphismWord& AutomorphismWord::then(GeneratorStep step) {
  require_dimension(n_, dimension(step), "word step");
  steps_.push_back(std::move(step));
  return *this;
}

Point eval_word(const AutomorphismWord& word, PointView z) {
  require_dimension(word.n(), z.size(), "eval_word");
  Point current(z.begin(), z.end());
  for (const auto& step : word.steps()) current = apply_step(step, current);
  return current;
}

AutomorphismWord compose(const AutomorphismWord& a, const AutomorphismWord& b) {
  require_dimension(a.n(), b.n(), "compose");
  std::vector<GeneratorStep> steps = a.steps();
  steps.insert(steps.end(), b.steps().begin(), b.steps().end());
  return AutomorphismWord(a.n(), std::move(steps));
}

AutomorphismWord invert_word(const AutomorphismWord& word) {
  AutomorphismWord out(word.n());
  for (auto it = word.steps().rbegin(); it != word.steps().rend(); ++it) {
    for (auto& s : invert_step(*it)) out.then(std::move(s));
  }
  return out;
}

Complex jacobian_det(const AutomorphismWord& word, PointView z) {
  require_dimension(word.n(), z.size(), "jacobian_det");
  Point current(z.begin(), z.end());
  Complex det = 1.0;
  for (const auto& step : word.steps()) {
    det *= step_jacobian_det(step, current);
    current = apply_step(step, current);
  }
  return det;
}

}  // namespace holo
