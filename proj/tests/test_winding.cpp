#include <gtest/gtest.h>

#include <cmath>

#include "holo/error.hpp"
#include "holo/winding.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holo;

namespace {

const auto kComplement = DomainSpec::complement(2, {1});

ContourSpec unit_contour(double radius = 1.0) { return make_contour(kComplement, 1, {1.0, 1.0}, radius); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

// The quadrature oracle sees w_s restricted to the contour's line.
double quadrature_index(const AutomorphismWord& w, const ContourSpec& c) {
  const std::size_t s = c.axis() - 1;
  return support::log_derivative_winding(
      [&](Complex zeta) {
        Point z = c.base_point();
        z[s] = zeta;
        return eval_word(w, z)[s];
      },
      c.radius());
}

}  // namespace

TEST(MakeContour, Examples) {
  const auto c = unit_contour();
  EXPECT_EQ(c.axis(), 1U);
  EXPECT_EQ(c.radius(), 1.0);
  EXPECT_EQ(kind_of([] { make_contour(kComplement, 2, {1.0, 1.0}, 1.0); }), ErrorKind::InvalidAxis);
  EXPECT_EQ(kind_of([] { make_contour(kComplement, 1, {0.0, 1.0}, 1.0); }), ErrorKind::OutsideDomain);
  EXPECT_EQ(kind_of([] { make_contour(kComplement, 1, {1.0, 1.0}, 0.0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { make_contour(DomainSpec::full(2), 1, {1.0, 1.0}, 1.0); }), ErrorKind::InvalidArgument);
}

TEST(MakeContour, CircleStaysInDomain) {
  const auto d = DomainSpec::complement(3, {1, 3});
  const auto c = make_contour(d, 1, {0.3, 0.0, Complex(0.0, 2.0)}, 0.7);
  for (int k = 0; k < 100; ++k) EXPECT_TRUE(contains(d, c.at(0.0628 * k)));
}

TEST(WindingIndex, ExamplesAgreeWithQuadratureOracle) {
  const auto c = unit_contour();
  struct Case {
    AutomorphismWord word;
    long expected;
  };
  const std::vector<Case> cases{
      {AutomorphismWord::identity(2), 1},
      {Inversion(2, 1), -1},
      {Diagonal({2.0, 3.0}), 1},
      {compose(Inversion(2, 1), Inversion(2, 1)), 1},
      {Diagonal({5.0, 1.0}), 1},
  };
  for (const auto& [word, expected] : cases) {
    const double oracle = quadrature_index(word, c);
    EXPECT_NEAR(oracle, static_cast<double>(expected), 1e-6);
    const auto result = winding_index(word, c);
    EXPECT_EQ(result.index, expected);
    EXPECT_EQ(result.index, std::lround(oracle));
    EXPECT_LT(std::abs(result.raw - static_cast<double>(result.index)), kIntegralityTolerance);
    EXPECT_GE(result.samples_used, kInitialContourSamples);
  }
}

TEST(WindingIndex, RefinesFastWindingMaps) {
  // w_1 = z1^40 + z2 with z2 frozen at 0: forty turns against 64 initial
  // samples forces bisection.
  AutomorphismWord w(2);
  w.then(Overshear(2, Polynomial(2, {{{40, 0}, 1.0}}), Polynomial(2))).then(Permutation({2, 1}));
  const auto c = make_contour(kComplement, 1, {1.0, 0.0}, 1.0);
  const auto r = winding_index(w, c);
  EXPECT_EQ(r.index, 40);
  EXPECT_GT(r.samples_used, kInitialContourSamples);
  EXPECT_NEAR(quadrature_index(w, c), 40.0, 1e-4);

  // w_1 = exp(3 z2) z1 with z2 frozen: still one turn.
  const AutomorphismWord scaled(Overshear(1, Polynomial(2), Polynomial::variable(2, 1, 3.0)));
  EXPECT_EQ(winding_index(scaled, unit_contour()).index, 1);
}

TEST(WindingIndex, ZeroOnContour) {
  // Translating z1 by the constant 1 sends the point z1 = -1 of the unit circle to 0.
  const AutomorphismWord w(Overshear(1, Polynomial::constant(2, 1.0), Polynomial(2)));
  EXPECT_EQ(kind_of([&] { winding_index(w, unit_contour()); }), ErrorKind::ZeroOnContour);
}

TEST(WindingIndex, NegativeComponent) {
  const auto c = unit_contour();
  EXPECT_TRUE(in_negative_component(Inversion(2, 1), c));
  EXPECT_FALSE(in_negative_component(AutomorphismWord::identity(2), c));
  EXPECT_FALSE(in_negative_component(Diagonal({5.0, 1.0}), c));
}

TEST(WindingIndex, IntegralityOnRandomWords) {
  Sampler rng(200);
  const auto d = DomainSpec::complement(2, {1, 2});
  const auto c = make_contour(d, 1, {1.0, Complex(0.5, 0.5)}, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto w = support::random_diagonal_inversion_word(rng, 2);
    const auto r = winding_index(w, c);
    EXPECT_LT(std::abs(r.raw - std::round(r.raw)), 1e-6);
    EXPECT_TRUE(r.index == 1 || r.index == -1);
  }
}

TEST(WindingIndex, RadiusAndBasePointInvariance) {
  Sampler rng(31);
  const auto d = DomainSpec::complement(2, {1, 2});
  for (int i = 0; i < 40; ++i) {
    const auto w = support::random_diagonal_inversion_word(rng, 2);
    const Point p{1.0, rng.annulus(0.2, 2.0)};
    const long reference = winding_index(w, make_contour(d, 1, p, 1.0)).index;
    for (double radius : {0.5, 2.0}) EXPECT_EQ(winding_index(w, make_contour(d, 1, p, radius)).index, reference);
    const Point moved{1.0, rng.annulus(0.2, 2.0)};
    EXPECT_EQ(winding_index(w, make_contour(d, 1, moved, 1.0)).index, reference);
  }
}
