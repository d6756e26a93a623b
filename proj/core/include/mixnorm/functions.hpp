#pragma once

#include <span>
#include <vector>

#include "mixnorm/grid.hpp"

namespace mixnorm {

// amplitude * prod_i exp(-pi a_i (x_i - c_i)^2) * exp(2 pi i w_i x_i)
struct GaussianAtom {
  Complex amplitude{1.0, 0.0};
  std::vector<double> center;
  std::vector<double> scale;
  std::vector<double> modulation;

  int rank() const noexcept { return static_cast<int>(scale.size()); }
};

// Envelope threshold used by the support rules: a component is contained
// when its Gaussian envelope has fallen below exp(-kSupportDecay) at the
// edge of the space domain and of the frequency domain.
inline constexpr double kSupportDecay = 23.0;

// Required half-widths for a grid to contain a function.
struct SupportRequirement {
  double half_extent = 0.0;     // space side
  double half_bandwidth = 0.0;  // frequency side

  SupportRequirement& merge(const SupportRequirement& o);
};

// Finite sum of axis-aligned modulated Gaussians on R^rank. Values and
// Fourier transforms are available in closed form; the empty sum is the
// zero function.
class GaussianSum {
 public:
  GaussianSum() = default;
  explicit GaussianSum(int rank) : rank_(rank) {}
  GaussianSum(int rank, std::vector<GaussianAtom> atoms);

  // Centered product Gaussian prod_i exp(-pi a_i x_i^2).
  static GaussianSum product(std::vector<double> scales, Complex amplitude = 1.0);

  int rank() const noexcept { return rank_; }
  const std::vector<GaussianAtom>& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_.empty(); }
  void add(GaussianAtom atom);

  Complex value(std::span<const double> x) const;
  // Continuum transform  int exp(-2 pi i x.xi) f(x) dx.
  Complex transform_value(std::span<const double> xi) const;

  // x -> amplitude * f(x with axes [first, first+count) multiplied by t).
  GaussianSum dilated(int first_axis, int count, double t, double amplitude) const;
  GaussianSum scaled(Complex c) const;
  // Closed-form product of two sums of the same rank.
  GaussianSum operator*(const GaussianSum& other) const;
  // Tensor product: (x, y) -> f(x) g(y).
  GaussianSum tensor(const GaussianSum& other) const;

  SupportRequirement support() const;
  // Smallest over atoms of the closed-form fraction of |atom|^2 mass that
  // lies in the domain [-L/2, L/2)^rank.
  double min_inside_mass_fraction(double extent) const;

 private:
  int rank_ = 0;
  std::vector<GaussianAtom> atoms_;
};

// (x, y) -> first(x) * second(y - shear * x) on R x R. shear = 1 is the
// shear construction, shear = -1 concentrates a near-delta second factor
// on the line y = -x.
struct ShearedProduct {
  GaussianSum first;
  GaussianSum second;
  double shear = 1.0;

  Complex value(double x, double y) const;
  // second^(eta) * first^(xi + shear * eta)
  Complex transform_value(double xi, double eta) const;
  SupportRequirement support() const;
};

// Throws ResolutionError naming the required extent / point count when the
// grid does not contain `need`.
void require_support(const SupportRequirement& need, const GridSpec& grid,
                     const char* what);

// Smallest grid with at least `min_points` points per axis that satisfies
// `need`; extent rounded up to a multiple of `extent_quantum` and point
// count to an even 5-smooth integer.
GridSpec fit_grid(DimensionPair dims, const SupportRequirement& need, int min_points = 16,
                  double extent_quantum = 1.0);

}  // namespace mixnorm
