#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holo/error.hpp"
#include "holo/torus.hpp"
#include "support/generators.hpp"

using namespace holo;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

}  // namespace

TEST(ApplyTorus, Examples) {
  const auto id = ExponentMatrix::identity(2);
  EXPECT_EQ(apply_torus(id, {{0.0, 0.0}}, Point{1.0, 2.0}), (Point{1.0, 2.0}));
  EXPECT_LT(sup_distance(apply_torus(id, {{kPi, 0.0}}, Point{1.0, 2.0}), Point{-1.0, 2.0}), 1e-15);
  const ExponentMatrix a({{1, 1}, {0, 1}});
  EXPECT_LT(sup_distance(apply_torus(a, {{kPi, kPi}}, Point{1.0, 1.0}), Point{1.0, -1.0}), 1e-15);
  EXPECT_THROW(apply_torus(a, {{kPi}}, Point{1.0, 1.0}), Error);
}

TEST(ApplyTorus, GroupLaw) {
  Sampler rng(3);
  const ExponentMatrix a({{2, 1, 0}, {1, 1, 0}, {0, 3, 1}});
  for (int i = 0; i < 200; ++i) {
    const TorusElement s{rng.angles(3)};
    const TorusElement t{rng.angles(3)};
    TorusElement sum{s.theta};
    for (std::size_t k = 0; k < 3; ++k) sum.theta[k] += t.theta[k];
    const Point z = rng.domain_point(3);
    EXPECT_LT(sup_distance(apply_torus(a, s, apply_torus(a, t, z)), apply_torus(a, sum, z)), 1e-12);
  }
}

TEST(ValidateExponentMatrix, Examples) {
  EXPECT_EQ(validate_exponent_matrix({{1, 0}, {0, 1}}), 1);
  EXPECT_EQ(validate_exponent_matrix({{1, 1}, {0, 1}}), 1);
  EXPECT_EQ(validate_exponent_matrix({{0, 1}, {1, 0}}), -1);
  try {
    validate_exponent_matrix({{2, 0}, {0, 1}});
    FAIL() << "expected NotUnimodular";
  } catch (const NotUnimodularError& e) {
    EXPECT_EQ(e.det(), 2);
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodular);
  }
  EXPECT_THROW(ExponentMatrix({{0, 0}, {0, 0}}), NotUnimodularError);
}

TEST(ValidateExponentMatrix, BareissNeedsPivoting) {
  EXPECT_EQ(integer_determinant({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), 1);
  EXPECT_EQ(integer_determinant({{2, 3, 1}, {4, 1, -3}, {-2, 5, 7}}), 2 * (7 + 15) - 3 * (28 - 6) + 1 * (20 + 2));
  EXPECT_EQ(integer_determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(integer_determinant({{-7}}), -7);
}

TEST(ValidateExponentMatrix, BruteForceTwoByTwo) {
  int accepted = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          const int det = a * d - b * c;
          const bool unimodular = det == 1 || det == -1;
          try {
            EXPECT_EQ(validate_exponent_matrix({{a, b}, {c, d}}), det);
            EXPECT_TRUE(unimodular);
            ++accepted;
          } catch (const NotUnimodularError& e) {
            EXPECT_FALSE(unimodular);
            EXPECT_EQ(e.det(), det);
          }
        }
  EXPECT_GT(accepted, 0);
}

TEST(CommutesWithTorus, Examples) {
  const auto d = DomainSpec::full(2);
  EXPECT_TRUE(commutes_with_torus(Diagonal({2.0, 3.0 * I}), d, 42).commutes);
  const auto id = commutes_with_torus(AutomorphismWord::identity(2), d, 42);
  EXPECT_TRUE(id.commutes);
  EXPECT_EQ(id.max_deviation, 0.0);

  const AutomorphismWord shear(Overshear(2, Polynomial::variable(2, 0), Polynomial(2)));
  const auto v = commutes_with_torus(shear, d, 42);
  EXPECT_FALSE(v.commutes);
  ASSERT_TRUE(v.witness);
  EXPECT_GT(v.witness->deviation, 1e-3);
  const TorusElement t{v.witness->theta};
  const auto torus = ExponentMatrix::identity(2);
  EXPECT_DOUBLE_EQ(sup_distance(eval_word(shear, apply_torus(torus, t, v.witness->z)),
                                apply_torus(torus, t, eval_word(shear, v.witness->z))),
                   v.witness->deviation);

  // The fixed witness from the definition: theta = (pi, 0), z = (1, 1).
  const TorusElement half{{kPi, 0.0}};
  const Point lhs = eval_word(shear, apply_torus(torus, half, Point{1.0, 1.0}));
  const Point rhs = apply_torus(torus, half, eval_word(shear, Point{1.0, 1.0}));
  EXPECT_LT(sup_distance(lhs, Point{-1.0, 0.0}), 1e-15);
  EXPECT_LT(sup_distance(rhs, Point{-1.0, 2.0}), 1e-15);
}

TEST(CommutesWithTorus, RequiresDomainPreservation) {
  try {
    commutes_with_torus(Inversion(2, 1), DomainSpec::full(2), 42);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutsideDomain);
  }
  // Admissible on the complement, but z -> 1/z conjugates the rotation.
  EXPECT_FALSE(commutes_with_torus(Inversion(2, 1), DomainSpec::complement(2, {1}), 42).commutes);
}

TEST(CommutesWithTorus, Dichotomy) {
  Sampler rng(17);
  const auto d = DomainSpec::full(3);
  for (int i = 0; i < 15; ++i) {
    EXPECT_TRUE(commutes_with_torus(support::random_diagonal_word(rng, 3), d, 42).commutes);
    const auto v = commutes_with_torus(support::random_noncommuting_word(rng, 3), d, 42);
    EXPECT_FALSE(v.commutes);
    EXPECT_GT(v.max_deviation, 1e-3);
  }
}

TEST(CommutesWithTorus, IsDeterministic) {
  const AutomorphismWord w(Permutation({2, 1}));
  const auto a = commutes_with_torus(w, DomainSpec::full(2), 5);
  const auto b = commutes_with_torus(w, DomainSpec::full(2), 5);
  EXPECT_EQ(a.max_deviation, b.max_deviation);
  EXPECT_EQ(a.witness->z, b.witness->z);
}

TEST(ExtractDiagonal, Examples) {
  const auto d = DomainSpec::full(2);
  EXPECT_EQ(extract_diagonal(Diagonal({2.0 * I, 3.0}), d, 42), (Point{2.0 * I, 3.0}));
  const auto lambda = extract_diagonal(compose(Diagonal({2.0, 1.0}), Diagonal({3.0, 5.0})), d, 42);
  EXPECT_EQ(lambda, (Point{6.0, 5.0}));
  try {
    extract_diagonal(Overshear(2, Polynomial::variable(2, 0), Polynomial(2)), d, 42);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDiagonal);
  }
}

TEST(ExtractDiagonal, InvertsTheDiagonalConstructorExactly) {
  Sampler rng(23);
  for (int i = 0; i < 200; ++i) {
    const Point lambda = support::random_diagonal(rng, 3).lambda;
    for (std::uint64_t seed : {1U, 2U, 3U}) {
      EXPECT_EQ(extract_diagonal(Diagonal(lambda), DomainSpec::full(3), seed), lambda);
    }
  }
}

TEST(ExtractDiagonal, DetectsCrossDependence) {
  // z2 -> 2 z2 + 1e-6 z1: ratios drift and w_2 depends on z_1.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(1, 1) = 2.0;
  m(1, 0) = 1e-6;
  EXPECT_THROW(extract_diagonal(Linear(m), DomainSpec::full(2), 42), Error);
  // A diagonal matrix given as a Linear step is recovered.
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = Complex(0.5, 1.0);
  diag(1, 1) = -3.0;
  const auto lambda = extract_diagonal(Linear(diag), DomainSpec::full(2), 42);
  EXPECT_LT(sup_distance(lambda, Point{Complex(0.5, 1.0), -3.0}), 1e-15);
}
