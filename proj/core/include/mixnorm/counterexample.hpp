#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixnorm/exponents.hpp"
#include "mixnorm/functions.hpp"
#include "mixnorm/grid.hpp"
#include "mixnorm/parallel.hpp"

namespace mixnorm {

struct SweepReport {
  std::string kind;
  std::vector<double> parameters;  // t, epsilon or lambda
  std::vector<double> observed;    // norm ratios, strictly positive
  double fitted_slope = 0.0;       // least squares of log observed on log parameter
  double expected_slope = 0.0;
  double residual = 0.0;           // max |log observed - fitted line|
  std::vector<double> rhs;           // right-side norms (blowup)
  std::vector<double> oracle_error;  // max |DFT - closed form| per point (blowup)
  std::vector<GridSpec> grids;       // grid used at each point
  nlohmann::json config = nlohmann::json::object();
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

// Ordinary least squares in log-log coordinates over all points. Parameters
// must be strictly monotone and observations strictly positive.
SlopeFit fit_loglog(std::span<const double> parameters, std::span<const double> observed);

// start, start*ratio, ..., count values.
std::vector<double> geometric_sequence(double start, double ratio, int count);

// max_k |v_k / v_0 - 1|
double relative_spread(std::span<const double> values);

// eta^(eta) t^{-1/p'} f^((xi + eta)/t) on the frequency grid: the transform
// of (x, y) -> t^{1/p} f(t x) g(y - x), evaluated from the closed-form
// transforms of f and g (no DFT, no dilated-atom algebra).
SampledFunction closed_form_transform(const GaussianSum& f, const GaussianSum& g, double t,
                                      const Exponent& p, const GridSpec& grid);

// Smallest grid that resolves the dilation-shear family at parameter t.
GridSpec blowup_grid(const GaussianSum& f, const GaussianSum& g, double t, const Exponent& p);

struct BlowupOptions {
  GaussianSum f = GaussianSum::product({1.0});
  GaussianSum g = GaussianSum::product({1.0});
  bool check_oracle = true;
  unsigned workers = default_workers();
};

// For each t: F = f_t(x) g(y - x), observed = ||F^||_{L^{p'}_xi L^{s'}_eta} /
// ||F||_{L^p_x L^s_y}. Expected slope 1/s' - 1/p'. Needs 1 <= s <= p <= 2
// and t in (0, 1].
SweepReport blowup_sweep(const Exponent& p, const Exponent& s, const std::vector<double>& t_values,
                         const BlowupOptions& options = {});

struct DeltaOptions {
  GaussianSum f = GaussianSum::product({1.0});
  // false: the unsheared product f(x) delta_eps(y) used as the control.
  bool shear = true;
  unsigned workers = default_workers();
};

// For each epsilon: F = f(x) delta_eps(y + x), observed =
// ||F^||_{L^{p'}_{xi'} L^inf_{xi''}} / ||F||_{L^p L^1}. Needs p in (1,2].
SweepReport delta_divergence_demo(const Exponent& p, const std::vector<double>& epsilon_values,
                                  const DeltaOptions& options = {});

// Observations strictly increase along the sweep and the last is at least
// twice the first.
bool divergence_milestone(const SweepReport& report);

enum class DilationGroup { first, second };

struct NecessityOptions {
  DimensionPair dims{1, 1};
  // Defaults (empty sums): product Gaussians with scales 1 and 3/2.
  GaussianSum f;
  GaussianSum g;
  unsigned workers = default_workers();
};

// d1 (1/r - (1 - 1/p - 1/q)) for the x' dilation, d2 (1/s + 1/t - 1) for
// the x'' dilation.
double predicted_necessity_slope(const ExponentTuple& tuple, DilationGroup group,
                                 DimensionPair dims);

// Bilinear ratio ||(F_l G_l)^(., 0)||_r / (||F_l||_{p,s} ||G_l||_{q,t}) with
// F_l, G_l dilated by lambda in the chosen group. The tuple need not be
// admissible. A constant lambda list is accepted; its slope is NaN.
SweepReport necessity_sweep(const ExponentTuple& tuple, const std::vector<double>& lambda_values,
                            DilationGroup group, const NecessityOptions& options = {});

// |fitted - expected| <= tolerance.
bool slope_within(const SweepReport& report, double tolerance);

}  // namespace mixnorm
