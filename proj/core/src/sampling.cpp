#include "mixnorm/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mixnorm/errors.hpp"

namespace mixnorm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMassRule = 0.999;

Complex cis(double turns) {
  const double angle = 2.0 * kPi * turns;
  return {std::cos(angle), std::sin(angle)};
}

// 53-bit uniform in [0,1) from the raw engine output; identical across
// standard libraries, unlike std::uniform_real_distribution.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double operator()(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

 private:
  std::mt19937_64 engine_;
};

// Adds amplitude * (u_0 (x) u_1 (x) ... ) to `values`.
void accumulate_separable(std::vector<Complex>& values, Complex amplitude,
                          const std::vector<std::vector<Complex>>& factors) {
  std::vector<Complex> block{amplitude};
  for (const auto& u : factors) {
    std::vector<Complex> next(block.size() * u.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Complex b = block[i];
      Complex* row = next.data() + i * u.size();
      for (std::size_t j = 0; j < u.size(); ++j) row[j] = b * u[j];
    }
    block.swap(next);
  }
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += block[i];
}

void check_mass_rule(const GaussianSum& f, const GridSpec& grid) {
  if (f.min_inside_mass_fraction(grid.extent()) < kMassRule) {
    throw ResolutionError("less than 99.9% of a component's L2 mass lies in the grid domain",
                          2.0 * f.support().half_extent, grid.points());
  }
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::gaussian_product: return "gaussian_product";
    case Family::random_ensemble: return "random_ensemble";
    case Family::dilation_shear: return "dilation_shear";
    case Family::near_delta: return "near_delta";
    case Family::explicit_values: return "explicit";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::gaussian_product, Family::random_ensemble, Family::dilation_shear,
                   Family::near_delta, Family::explicit_values}) {
    if (name == to_string(f)) return f;
  }
  throw PreconditionError("unknown function family '" + name + "'");
}

void to_json(nlohmann::json& j, const FunctionDescriptor& d) {
  j = nlohmann::json{{"family", to_string(d.family)}, {"parameters", d.parameters}, {"seed", d.seed}};
}

void from_json(const nlohmann::json& j, FunctionDescriptor& d) {
  d.family = family_from_string(j.at("family").get<std::string>());
  d.parameters = j.value("parameters", nlohmann::json::object());
  d.seed = j.value("seed", std::uint64_t{0});
}

SampledFunction sample(const GaussianSum& f, const GridSpec& grid) {
  if (f.rank() != grid.rank()) throw PreconditionError("function rank does not match grid");
  require_support(f.support(), grid, "function");
  check_mass_rule(f, grid);
  const auto x = grid.coordinates(Side::space);
  std::vector<Complex> values(grid.total_size());
  std::vector<std::vector<Complex>> factors(f.rank(), std::vector<Complex>(x.size()));
  for (const auto& atom : f.atoms()) {
    for (int i = 0; i < f.rank(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - atom.center[i];
        factors[i][j] = std::exp(-kPi * atom.scale[i] * d * d) * cis(atom.modulation[i] * x[j]);
      }
    }
    accumulate_separable(values, atom.amplitude, factors);
  }
  return SampledFunction(grid, std::move(values), Side::space, Side::space);
}

SampledFunction sample_transform(const GaussianSum& f, const GridSpec& grid) {
  if (f.rank() != grid.rank()) throw PreconditionError("function rank does not match grid");
  require_support(f.support(), grid, "function");
  const auto xi = grid.coordinates(Side::frequency);
  std::vector<Complex> values(grid.total_size());
  std::vector<std::vector<Complex>> factors(f.rank(), std::vector<Complex>(xi.size()));
  for (const auto& atom : f.atoms()) {
    for (int i = 0; i < f.rank(); ++i) {
      const double a = atom.scale[i];
      for (std::size_t k = 0; k < xi.size(); ++k) {
        const double d = xi[k] - atom.modulation[i];
        factors[i][k] = std::exp(-kPi * d * d / a) / std::sqrt(a) * cis(-atom.center[i] * d);
      }
    }
    accumulate_separable(values, atom.amplitude, factors);
  }
  return SampledFunction(grid, std::move(values), Side::frequency, Side::frequency);
}

SampledFunction sample(const ShearedProduct& f, const GridSpec& grid) {
  if (!(grid.dims() == DimensionPair{1, 1})) {
    throw PreconditionError("sheared products need a d1 = d2 = 1 grid");
  }
  require_support(f.support(), grid, "sheared product");
  check_mass_rule(f.first, grid);
  const auto x = grid.coordinates(Side::space);
  const int n = grid.points();
  std::vector<Complex> values(grid.total_size());
  for (int i = 0; i < n; ++i) {
    const double xi[1] = {x[i]};
    const Complex fx = f.first.value(xi);
    if (fx == Complex(0.0, 0.0)) continue;
    for (int j = 0; j < n; ++j) {
      const double y[1] = {x[j] - f.shear * x[i]};
      values[static_cast<std::size_t>(i) * n + j] = fx * f.second.value(y);
    }
  }
  return SampledFunction(grid, std::move(values), Side::space, Side::space);
}

SampledFunction sample_transform(const ShearedProduct& f, const GridSpec& grid) {
  if (!(grid.dims() == DimensionPair{1, 1})) {
    throw PreconditionError("sheared products need a d1 = d2 = 1 grid");
  }
  require_support(f.support(), grid, "sheared product");
  const auto xi = grid.coordinates(Side::frequency);
  const int n = grid.points();
  std::vector<Complex> values(grid.total_size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      values[static_cast<std::size_t>(i) * n + j] = f.transform_value(xi[i], xi[j]);
    }
  }
  return SampledFunction(grid, std::move(values), Side::frequency, Side::frequency);
}

SampledFunction sample(const ContinuumFunction& f, const GridSpec& grid) {
  return std::visit([&](const auto& g) { return sample(g, grid); }, f);
}

SampledFunction sample_transform(const ContinuumFunction& f, const GridSpec& grid) {
  return std::visit([&](const auto& g) { return sample_transform(g, grid); }, f);
}

SupportRequirement support_of(const ContinuumFunction& f) {
  return std::visit([](const auto& g) { return g.support(); }, f);
}

SampledFunction gaussian_product(const GridSpec& grid, const std::vector<double>& scales) {
  if (static_cast<int>(scales.size()) != grid.rank()) {
    throw PreconditionError("need one Gaussian scale per grid axis");
  }
  return sample(GaussianSum::product(scales), grid);
}

GaussianSum random_ensemble_function(const GridSpec& grid, int complexity, std::uint64_t seed) {
  if (complexity < 1) throw PreconditionError("ensemble complexity must be at least 1");
  const double quarter = 0.24 * grid.extent();
  const double top = (grid.points() / 2 - 1) * grid.frequency_spacing();
  // Space radius sqrt(k/(pi a)) <= quarter, frequency radius sqrt(k a/pi) <= 0.8 top.
  const double a_min = kSupportDecay / (kPi * quarter * quarter);
  const double a_max = kPi * (0.8 * top) * (0.8 * top) / kSupportDecay;
  if (a_max < 1.05 * a_min) {
    const double extent_needed = 2.0 * quarter / 0.24;
    throw ResolutionError("grid too coarse for a random ensemble (raise N at fixed L)",
                          extent_needed,
                          static_cast<int>(std::ceil(2.0 * grid.extent() *
                                                     std::sqrt(1.1 * a_min * kSupportDecay / kPi) /
                                                     0.8)));
  }
  const double a_hi = std::min(a_max, 6.0 * a_min);
  Uniform uniform(seed);
  GaussianSum out(grid.rank());
  for (int k = 0; k < complexity; ++k) {
    GaussianAtom atom;
    const double magnitude = uniform(0.5, 1.5);
    atom.amplitude = magnitude * cis(uniform());
    for (int i = 0; i < grid.rank(); ++i) {
      const double a = a_min * std::exp(uniform() * std::log(a_hi / a_min));
      const double w_max = 0.9 * (top - std::sqrt(kSupportDecay * a / kPi));
      atom.scale.push_back(a);
      atom.center.push_back(uniform(-0.25, 0.25) * grid.extent() * 0.96);
      atom.modulation.push_back(uniform(-w_max, w_max));
    }
    out.add(std::move(atom));
  }
  return out;
}

SampledFunction random_ensemble(const GridSpec& grid, int complexity, std::uint64_t seed) {
  return sample(random_ensemble_function(grid, complexity, seed), grid);
}

GaussianSum dilate_first_axis(const GaussianSum& f, double t, const Exponent& p) {
  if (!(t > 0.0)) throw PreconditionError("dilation parameter must be positive");
  return f.dilated(0, 1, t, std::pow(t, p.reciprocal()));
}

SampledFunction dilate_first_axis(const GaussianSum& f, double t, const Exponent& p,
                                  const GridSpec& grid) {
  return sample(dilate_first_axis(f, t, p), grid);
}

SampledFunction shear_product(const GaussianSum& f_first, const GaussianSum& g_second,
                              const GridSpec& grid) {
  return sample(ShearedProduct{f_first, g_second, 1.0}, grid);
}

GaussianSum unit_mass_bump(double epsilon) {
  if (!(epsilon > 0.0)) throw PreconditionError("bump width must be positive");
  return GaussianSum::product({1.0 / (epsilon * epsilon)}, 1.0 / epsilon);
}

ShearedProduct near_delta_function(const GaussianSum& f, double epsilon) {
  return ShearedProduct{f, unit_mass_bump(epsilon), -1.0};
}

SampledFunction near_delta_family(const GridSpec& grid, const GaussianSum& f, double epsilon) {
  if (epsilon < 2.0 * grid.spacing()) {
    throw ResolutionError("epsilon " + std::to_string(epsilon) +
                              " is below twice the grid spacing " +
                              std::to_string(grid.spacing()),
                          grid.extent(),
                          static_cast<int>(std::ceil(2.0 * grid.extent() / epsilon)));
  }
  return sample(near_delta_function(f, epsilon), grid);
}

ContinuumFunction build(const FunctionDescriptor& d, const GridSpec& grid) {
  const auto& prm = d.parameters;
  switch (d.family) {
    case Family::gaussian_product: {
      std::vector<double> scales;
      if (prm.contains("scales")) {
        scales = prm.at("scales").get<std::vector<double>>();
      } else {
        scales.assign(grid.rank(), 1.0);
      }
      if (static_cast<int>(scales.size()) != grid.rank()) {
        throw PreconditionError("need one Gaussian scale per grid axis");
      }
      return GaussianSum::product(std::move(scales));
    }
    case Family::random_ensemble:
      return random_ensemble_function(grid, prm.value("complexity", 8), d.seed);
    case Family::dilation_shear: {
      const double t = prm.value("t", 1.0);
      const Exponent p = Exponent::parse(prm.value("p", std::string("2")));
      const auto f = GaussianSum::product({prm.value("f_scale", 1.0)});
      const auto g = GaussianSum::product({prm.value("g_scale", 1.0)});
      return ShearedProduct{dilate_first_axis(f, t, p), g, 1.0};
    }
    case Family::near_delta: {
      const auto f = GaussianSum::product({prm.value("f_scale", 1.0)});
      ShearedProduct out = near_delta_function(f, prm.value("epsilon", 1.0));
      out.shear = prm.value("shear", -1.0);
      return out;
    }
    case Family::explicit_values:
      break;
  }
  throw PreconditionError("explicit functions have no continuum description");
}

SampledFunction sample(const FunctionDescriptor& d, const GridSpec& grid) {
  if (d.family == Family::near_delta) {
    const double eps = d.parameters.value("epsilon", 1.0);
    if (eps < 2.0 * grid.spacing()) {
      const auto f = GaussianSum::product({d.parameters.value("f_scale", 1.0)});
      return near_delta_family(grid, f, eps);  // throws with the resolution report
    }
  }
  return sample(build(d, grid), grid);
}

}  // namespace mixnorm
