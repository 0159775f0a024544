#pragma once

#include <Eigen/Dense>
#include <concepts>
#include <variant>
#include <vector>

#include "holo/polynomial.hpp"
#include "holo/types.hpp"

namespace holo {

// Coordinate indices (axes, permutation entries) are 1-based throughout the
// public interface, matching the usual z_1..z_n labelling.

/// Determinant threshold for Linear steps, applied after scaling every row to
/// unit Euclidean norm.
inline constexpr double kLinearDetTolerance = 1e-12;

/// z_axis -> f(z') + exp(g(z')) * z_axis, all other coordinates fixed. f and g
/// are polynomials in all n variables that must not involve z_axis.
struct Overshear {
  Overshear(std::size_t axis, Polynomial f, Polynomial g);

  std::size_t n() const noexcept { return f.n_vars(); }

  std::size_t axis;
  Polynomial f;
  Polynomial g;

  friend bool operator==(const Overshear&, const Overshear&) = default;
};

/// Coordinate i is moved to slot perm[i-1].
struct Permutation {
  explicit Permutation(std::vector<std::size_t> perm);
  static Permutation transposition(std::size_t n, std::size_t j, std::size_t k);

  std::size_t n() const noexcept { return perm.size(); }
  bool is_identity() const noexcept;
  int sign() const;

  std::vector<std::size_t> perm;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// (z_1, ..., z_n) -> (lambda_1 z_1, ..., lambda_n z_n) with every lambda_j != 0.
struct Diagonal {
  explicit Diagonal(Point lambda);

  std::size_t n() const noexcept { return lambda.size(); }

  Point lambda;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// z -> M z for an invertible complex matrix M.
struct Linear {
  explicit Linear(Eigen::MatrixXcd matrix);

  std::size_t n() const noexcept { return static_cast<std::size_t>(matrix.rows()); }

  Eigen::MatrixXcd matrix;

  friend bool operator==(const Linear& a, const Linear& b) {
    return a.matrix.rows() == b.matrix.rows() && a.matrix.cols() == b.matrix.cols() && a.matrix == b.matrix;
  }
};

/// z_axis -> 1 / z_axis, all other coordinates fixed.
struct Inversion {
  Inversion(std::size_t n, std::size_t axis);

  std::size_t n() const noexcept { return dim; }

  std::size_t dim;
  std::size_t axis;

  friend bool operator==(const Inversion&, const Inversion&) = default;
};

using GeneratorStep = std::variant<Overshear, Permutation, Diagonal, Linear, Inversion>;

std::size_t dimension(const GeneratorStep& step);
Point apply_step(const GeneratorStep& step, PointView z);
Complex step_jacobian_det(const GeneratorStep& step, PointView z);
/// Steps whose left-to-right composition is the inverse of `step`.
std::vector<GeneratorStep> invert_step(const GeneratorStep& step);

/// Relative determinant used for the Linear invertibility check.
double scaled_determinant(const Eigen::MatrixXcd& m);

/// A finite composition of generator steps; the first step is applied first.
/// The empty word is the identity.
class AutomorphismWord {
 public:
  explicit AutomorphismWord(std::size_t n);
  AutomorphismWord(std::size_t n, std::vector<GeneratorStep> steps);
  /// Single-step word.
  template <class Step>
    requires std::constructible_from<GeneratorStep, Step>
  AutomorphismWord(Step step)  // NOLINT(google-explicit-constructor)
      : AutomorphismWord(step.n()) {
    steps_.emplace_back(std::move(step));
  }

  static AutomorphismWord identity(std::size_t n) { return AutomorphismWord(n); }

  std::size_t n() const noexcept { return n_; }
  const std::vector<GeneratorStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }

  AutomorphismWord& then(GeneratorStep step);

  friend bool operator==(const AutomorphismWord&, const AutomorphismWord&) = default;

 private:
  std::size_t n_;
  std::vector<GeneratorStep> steps_;
};

Point eval_word(const AutomorphismWord& word, PointView z);
/// Word evaluating as z -> b(a(z)).
AutomorphismWord compose(const AutomorphismWord& a, const AutomorphismWord& b);
AutomorphismWord invert_word(const AutomorphismWord& word);
/// Chain-rule product of the step Jacobian determinants along the orbit of z.
Complex jacobian_det(const AutomorphismWord& word, PointView z);

}  // namespace holo
