#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mixnorm/errors.hpp"
#include "mixnorm/mixed_norms.hpp"
#include "mixnorm/sampling.hpp"

using namespace mixnorm;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

// N = 2, L = 2: unit cells, so sums are plain sums.
SampledFunction two_by_two(double a, double b, double c, double d) {
  const GridSpec g({1, 1}, 2, 2.0);
  return SampledFunction(g, {a, b, c, d}, Side::space, Side::space);
}

// ||exp(-pi a x^2)||_p on R.
double gauss_norm(double a, double p) { return std::pow(p * a, -0.5 / p); }

}  // namespace

TEST(MixedNorm, IdentityMatrixOracle) {
  const auto f = two_by_two(1, 0, 0, 1);
  const auto m = minkowski_compare(f, E("1"), E("2"));
  // L^2 over the second group outermost: ||(1,1)||_2 = sqrt 2; the reverse
  // gives ||(1,1)||_1 = 2.
  EXPECT_NEAR(m.larger_outer, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(m.smaller_outer, 2.0, 1e-15);
  EXPECT_TRUE(m.holds);
}

TEST(MixedNorm, OrderOfIntegrationOnSmallArray) {
  const auto f = two_by_two(1, 2, 3, 4);
  // rows (1,2), (3,4): inner L^1 gives (3, 7); outer L^2 gives sqrt 58.
  EXPECT_NEAR(mixed_norm(f, E("2"), E("1")), std::sqrt(58.0), 1e-13);
  // columns (1,3), (2,4): inner L^2 gives (sqrt 10, sqrt 20); outer L^1.
  EXPECT_NEAR(reversed_mixed_norm(f, E("1"), E("2")), std::sqrt(10.0) + std::sqrt(20.0), 1e-13);
  EXPECT_NEAR(mixed_norm(f, E("inf"), E("inf")), 4.0, 0.0);
  EXPECT_NEAR(mixed_norm(f, E("1"), E("inf")), 6.0, 1e-15);
}

TEST(MixedNorm, AllOnesOnUnitMeasureIsOne) {
  const GridSpec g({1, 1}, 2, 1.0);
  const SampledFunction f(g, {1, 1, 1, 1}, Side::space, Side::space);
  for (const char* a : {"1", "3/2", "2", "inf"})
    for (const char* b : {"1", "4", "inf"}) EXPECT_NEAR(mixed_norm(f, E(a), E(b)), 1.0, 1e-15);
}

TEST(MixedNorm, ProductGaussianFactorizes) {
  const GridSpec g({1, 1}, 256, 16.0);
  const auto f = gaussian_product(g, {1.0, 2.0});
  for (const char* p : {"1", "4/3", "2", "4"}) {
    for (const char* s : {"1", "3/2", "2"}) {
      const double want = gauss_norm(1.0, E(p).value()) * gauss_norm(2.0, E(s).value());
      EXPECT_NEAR(mixed_norm(f, E(p), E(s)) / want, 1.0, 1e-12) << p << " " << s;
    }
  }
  EXPECT_NEAR(plain_norm(gaussian_product(g, {4.0, 4.0}), E("1")), 0.25, 1e-13);
}

TEST(MixedNorm, EqualExponentsGivePlainNorm) {
  const GridSpec g({1, 1}, 128, 16.0);
  const auto f = random_ensemble(g, 6, 2);
  for (const char* a : {"1", "4/3", "3"}) {
    EXPECT_NEAR(mixed_norm(f, E(a), E(a)) / plain_norm(f, E(a)), 1.0, 1e-12);
    EXPECT_NEAR(reversed_mixed_norm(f, E(a), E(a)) / plain_norm(f, E(a)), 1.0, 1e-12);
  }
}

TEST(MixedNorm, WeightedNormMatchesDirectSum) {
  const std::vector<double> m{1e-300, 3.0, 0.5, 2.0};
  EXPECT_NEAR(weighted_norm(m, 0.5, E("1")), 0.5 * 5.5, 1e-15);
  EXPECT_NEAR(weighted_norm(m, 0.5, E("2")), std::sqrt(0.5 * 13.25), 1e-14);
  EXPECT_NEAR(weighted_norm(m, 0.5, E("3")), std::cbrt(0.5 * (27.0 + 0.125 + 8.0)), 1e-14);
  EXPECT_EQ(weighted_norm(m, 0.5, E("inf")), 3.0);
  const std::vector<double> huge{1e200, 1e200};
  EXPECT_NEAR(weighted_norm(huge, 1.0, E("2")) / (std::sqrt(2.0) * 1e200), 1.0, 1e-15);
}

TEST(Minkowski, RandomNonnegativeArrays) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<Exponent> exps{E("1"), E("3/2"), E("2"), E("3"), E("inf")};
  for (int trial = 0; trial < 200; ++trial) {
    const GridSpec g({1, 1}, 2 * (1 + trial % 4), 1.0 + trial % 3);
    std::vector<Complex> v(g.total_size());
    for (auto& x : v) x = u(rng) * (u(rng) < 0.3 ? 0.0 : 1.0);
    const SampledFunction f(g, v, Side::space, Side::space);
    for (const auto& a : exps) {
      for (const auto& b : exps) {
        if (b < a) continue;
        const auto m = minkowski_compare(f, a, b);
        EXPECT_TRUE(m.holds) << a.to_string() << " " << b.to_string();
      }
    }
  }
}

TEST(Minkowski, RejectsNegativeRealEntries) {
  EXPECT_THROW(minkowski_compare(two_by_two(1, -1, 0, 1), E("1"), E("2")), PreconditionError);
}

TEST(Holder, ProductBoundedByFactorNorms) {
  const GridSpec g({1, 1}, 128, 16.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_ensemble(g, 4, 2 * seed);
    const auto h = random_ensemble(g, 4, 2 * seed + 1);
    const auto c = holder_compare(f, h, E("4"), E("3/2"), E("4"), E("3"));
    EXPECT_FALSE(c.degenerate);
    EXPECT_LE(c.ratio, 1.0 + 1e-12);
  }
  const auto z = SampledFunction(GridSpec({1, 1}, 4, 1.0));
  EXPECT_TRUE(holder_compare(z, z, E("2"), E("2"), E("2"), E("2")).degenerate);
}
