#include <gtest/gtest.h>

#include <cmath>

#include "mixnorm/counterexample.hpp"
#include "mixnorm/errors.hpp"
#include "mixnorm/sampling.hpp"
#include "mixnorm/transform.hpp"

using namespace mixnorm;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

// Exact continuum ratio for f = g = exp(-pi x^2) under the dilation-shear
// family, from Gaussian integrals done by hand.
double exact_blowup_ratio(double p, double s, double t) {
  const double pc = p / (p - 1.0);
  const double sc = s / (s - 1.0);
  const double u = 1.0 + t * t;
  const double lhs = std::pow(t, -1.0 / pc) * std::pow(sc * u / (t * t), -0.5 / sc) *
                     std::pow(u / pc, 0.5 / pc);
  const double rhs = std::pow(p, -0.5 / p) * std::pow(s, -0.5 / s);
  return lhs / rhs;
}

}  // namespace

TEST(Fit, RecoversExactPowerLaw) {
  const auto x = geometric_sequence(1.0, 0.5, 6);
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -0.7));
  const auto fit = fit_loglog(x, y);
  EXPECT_NEAR(fit.slope, -0.7, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-12);
  EXPECT_NEAR(fit.residual, 0.0, 1e-12);
}

TEST(Fit, RejectsBadInput) {
  const std::vector<double> x{1, 2, 2};
  const std::vector<double> y{1, 1, 1};
  EXPECT_THROW(fit_loglog(x, y), PreconditionError);
  const std::vector<double> x2{1, 2, 3};
  const std::vector<double> y2{1, 0, 1};
  EXPECT_THROW(fit_loglog(x2, y2), PreconditionError);
}

TEST(Fit, GeometricSequenceIsExactForPowersOfTwo) {
  const auto x = geometric_sequence(1.0, 0.5, 6);
  EXPECT_EQ(x.back(), 1.0 / 32.0);
  EXPECT_NEAR(relative_spread(std::vector<double>{2.0, 2.002, 1.999}), 1e-3, 1e-12);
}

TEST(Blowup, MatchesExactGaussianRatio) {
  const auto ts = geometric_sequence(1.0, 0.5, 6);
  const auto rep = blowup_sweep(2, E("4/3"), ts);
  ASSERT_EQ(rep.observed.size(), ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_NEAR(rep.observed[i] / exact_blowup_ratio(2.0, 4.0 / 3.0, ts[i]), 1.0, 1e-8) << ts[i];
    EXPECT_LE(rep.oracle_error[i], 1e-6);
  }
  std::vector<double> exact;
  for (double t : ts) exact.push_back(exact_blowup_ratio(2.0, 4.0 / 3.0, t));
  EXPECT_NEAR(rep.fitted_slope, fit_loglog(ts, exact).slope, 1e-6);
  EXPECT_NEAR(rep.expected_slope, -0.25, 1e-15);
  EXPECT_LE(relative_spread(rep.rhs), 1e-3);
}

TEST(Blowup, EqualExponentsAreFlat) {
  const auto rep = blowup_sweep(2, 2, geometric_sequence(1.0, 0.5, 4));
  EXPECT_NEAR(rep.fitted_slope, 0.0, 1e-6);
  for (double v : rep.observed) EXPECT_NEAR(v, 1.0, 1e-9);
}

TEST(Blowup, ClosedFormTransformAgreesWithFft) {
  const auto f = GaussianSum::product({1.0});
  const auto g = GaussianSum::product({2.0});
  const double t = 0.25;
  const auto grid = blowup_grid(f, g, t, E("3/2"));
  const auto tilted = dilate_first_axis(f, t, E("3/2"));
  const auto fhat = fourier(shear_product(tilted, g, grid));
  EXPECT_LE(max_abs_difference(fhat, closed_form_transform(f, g, t, E("3/2"), grid)), 1e-9);
}

TEST(Blowup, RejectsParametersOutsideTheRegime) {
  EXPECT_THROW(blowup_sweep(E("4/3"), 2, {1.0}), PreconditionError);
  EXPECT_THROW(blowup_sweep(2, E("4/3"), {2.0}), PreconditionError);
}

TEST(Delta, RatioGrowsAndControlStaysBounded) {
  const auto eps = geometric_sequence(1.0, 0.5, 5);
  const auto rep = delta_divergence_demo(2, eps);
  EXPECT_TRUE(divergence_milestone(rep));
  // For p = 2 the continuum ratio is ((1 + eps^2) / eps^2)^{1/4}. The inner
  // sup is taken over frequency samples, which can sit up to half a cell
  // off the ridge, so agreement is only to about a percent.
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double e2 = eps[i] * eps[i];
    const double exact = std::pow((1 + e2) / e2, 0.25);
    EXPECT_LE(rep.observed[i], exact * (1 + 1e-9));
    EXPECT_GE(rep.observed[i], exact * (1 - 2e-2));
  }
  DeltaOptions control;
  control.shear = false;
  const auto ctl = delta_divergence_demo(2, eps, control);
  EXPECT_FALSE(divergence_milestone(ctl));
  for (double v : ctl.observed) EXPECT_LE(v, 1.0 + 1e-2);
}

TEST(Delta, MilestoneNeedsStrictIncreaseAndDoubling) {
  SweepReport r;
  r.observed = {1.0, 1.5, 2.5};
  EXPECT_TRUE(divergence_milestone(r));
  r.observed = {1.0, 1.5, 1.9};
  EXPECT_FALSE(divergence_milestone(r));
  r.observed = {1.0, 2.5, 2.5};
  EXPECT_FALSE(divergence_milestone(r));
}

TEST(Necessity, PredictedSlopes) {
  EXPECT_EQ(predicted_necessity_slope({4, 2, 4, 2, 2}, DilationGroup::first, {1, 1}), 0.0);
  EXPECT_NEAR(predicted_necessity_slope({4, 1, 4, 2, 2}, DilationGroup::second, {1, 1}), 0.5,
              1e-15);
  EXPECT_NEAR(predicted_necessity_slope({4, 2, 4, 2, 4}, DilationGroup::first, {2, 1}), -0.5,
              1e-15);
}

TEST(Necessity, SweepsFollowTheChangeOfVariables) {
  const auto lambdas = geometric_sequence(0.5, std::sqrt(2.0), 5);
  struct Case {
    ExponentTuple x;
    DilationGroup group;
  };
  for (const Case& c : {Case{{4, 2, 4, 2, 2}, DilationGroup::first},
                        Case{{4, 2, 4, 2, 2}, DilationGroup::second},
                        Case{{4, 1, 4, 2, 2}, DilationGroup::second},
                        Case{{4, 2, 4, 2, 4}, DilationGroup::first}}) {
    const auto rep = necessity_sweep(c.x, lambdas, c.group);
    EXPECT_NEAR(rep.fitted_slope, rep.expected_slope, 1e-6) << c.x.to_string();
    EXPECT_TRUE(slope_within(rep, 0.02));
  }
}

TEST(Necessity, ConstantLambdaGivesNanSlope) {
  const auto rep = necessity_sweep({4, 2, 4, 2, 2}, {1.0, 1.0}, DilationGroup::first);
  EXPECT_TRUE(std::isnan(rep.fitted_slope));
  EXPECT_FALSE(slope_within(rep, 0.02));
}
