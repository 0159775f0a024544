#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holo/domain.hpp"
#include "holo/types.hpp"
#include "holo/word.hpp"

namespace holo {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Exact integer determinant by fraction-free (Bareiss) elimination.
std::int64_t integer_determinant(const IntMatrix& a);

/// Returns det(a) when it is +1 or -1, otherwise throws NotUnimodularError.
int validate_exponent_matrix(const IntMatrix& a);

/// Square integer matrix with determinant +-1, describing the torus action
/// z_j -> exp(i (a theta)_j) z_j.
class ExponentMatrix {
 public:
  explicit ExponentMatrix(IntMatrix a);
  static ExponentMatrix identity(std::size_t n);

  std::size_t n() const noexcept { return a_.size(); }
  const IntMatrix& entries() const noexcept { return a_; }
  int det() const noexcept { return det_; }

 private:
  IntMatrix a_;
  int det_;
};

struct TorusElement {
  std::vector<double> theta;
};

/// (exp(i (a theta)_j) z_j)_j
Point apply_torus(const ExponentMatrix& a, const TorusElement& t, PointView z);

inline constexpr std::size_t kTorusTrials = 64;
inline constexpr std::size_t kTorusPoints = 64;
inline constexpr double kCommutationThreshold = 1e-10;

struct CommutationWitness {
  std::vector<double> theta;
  Point z;
  double deviation;
};

struct CommutationVerdict {
  bool commutes;
  double max_deviation;
  std::optional<CommutationWitness> witness;
};

/// Samples ||w(t z) - t w(z)||_inf over a seeded grid of torus rotations t
/// and domain points z; the word must preserve the domain.
CommutationVerdict commutes_with_torus(const AutomorphismWord& w, const DomainSpec& d, std::uint64_t seed);

inline constexpr std::size_t kDiagonalCheckPoints = 32;
inline constexpr double kRatioTolerance = 1e-9;
inline constexpr double kDependenceTolerance = 1e-10;

/// Reads off lambda with w(z) = (lambda_j z_j)_j and verifies it on seeded
/// points, including that w_j ignores every z_k with k != j. Throws
/// NotDiagonal when the word is not of that form.
Point extract_diagonal(const AutomorphismWord& w, const DomainSpec& d, std::uint64_t seed);

}  // namespace holo
