#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "mixnorm/functions.hpp"
#include "mixnorm/grid.hpp"

namespace mixnorm {

enum class Family { gaussian_product, random_ensemble, dilation_shear, near_delta, explicit_values };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

// Family name + parameters + seed; together with a grid this fully
// determines the sampled values.
//
//   gaussian_product  {"scales": [a_1, ..., a_d]}
//   random_ensemble   {"complexity": K}
//   dilation_shear    {"t": t, "p": "4/3", "f_scale": a, "g_scale": b}
//   near_delta        {"epsilon": e, "f_scale": a, "shear": -1}
//   explicit_values   {}   (values supplied out of band)
struct FunctionDescriptor {
  Family family = Family::gaussian_product;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;

  friend bool operator==(const FunctionDescriptor&, const FunctionDescriptor&) = default;
};

void to_json(nlohmann::json& j, const FunctionDescriptor& d);
void from_json(const nlohmann::json& j, FunctionDescriptor& d);

using ContinuumFunction = std::variant<GaussianSum, ShearedProduct>;

// Samples on the space grid (all groups on the space side). Throws
// ResolutionError when the function is not contained by the grid.
SampledFunction sample(const GaussianSum& f, const GridSpec& grid);
SampledFunction sample(const ShearedProduct& f, const GridSpec& grid);
SampledFunction sample(const ContinuumFunction& f, const GridSpec& grid);
// Closed-form transform sampled on the frequency grid (no DFT involved).
SampledFunction sample_transform(const GaussianSum& f, const GridSpec& grid);
SampledFunction sample_transform(const ShearedProduct& f, const GridSpec& grid);
SampledFunction sample_transform(const ContinuumFunction& f, const GridSpec& grid);

SupportRequirement support_of(const ContinuumFunction& f);

// prod_i exp(-pi a_i x_i^2) over all grid axes.
SampledFunction gaussian_product(const GridSpec& grid, const std::vector<double>& scales);

// Sum of K modulated Gaussians with random centers, scales, modulations and
// complex amplitudes, drawn so that the sum stays inside the space and
// frequency domains of `grid`. Deterministic in `seed`.
GaussianSum random_ensemble_function(const GridSpec& grid, int complexity, std::uint64_t seed);
SampledFunction random_ensemble(const GridSpec& grid, int complexity, std::uint64_t seed);

// x -> t^{1/p} f(t x_0, x_1, ...): the L^p-normalized dilation in the first
// coordinate, evaluated analytically.
GaussianSum dilate_first_axis(const GaussianSum& f, double t, const Exponent& p);
SampledFunction dilate_first_axis(const GaussianSum& f, double t, const Exponent& p,
                                  const GridSpec& grid);

// (x, y) -> f(x) g(y - x) on a d1 = d2 = 1 grid.
SampledFunction shear_product(const GaussianSum& f_first, const GaussianSum& g_second,
                              const GridSpec& grid);

// Unit-mass Gaussian of width epsilon on R: eps^{-1} exp(-pi y^2 / eps^2).
GaussianSum unit_mass_bump(double epsilon);
// (x, y) -> f(x) delta_eps(y + x). Throws ResolutionError when epsilon is
// below twice the grid spacing.
ShearedProduct near_delta_function(const GaussianSum& f, double epsilon);
SampledFunction near_delta_family(const GridSpec& grid, const GaussianSum& f, double epsilon);

// Continuum function described by `d` on `grid` (grid fixes the rank and
// bounds for random ensembles). explicit_values has no continuum form.
ContinuumFunction build(const FunctionDescriptor& d, const GridSpec& grid);
SampledFunction sample(const FunctionDescriptor& d, const GridSpec& grid);

}  // namespace mixnorm
