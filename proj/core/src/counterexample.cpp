#include "mixnorm/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mixnorm/errors.hpp"
#include "mixnorm/inequalities.hpp"
#include "mixnorm/mixed_norms.hpp"
#include "mixnorm/report_io.hpp"
#include "mixnorm/sampling.hpp"
#include "mixnorm/transform.hpp"

namespace mixnorm {
namespace {

bool strictly_monotone(std::span<const double> v) {
  if (v.size() < 2) return false;
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    up = up && v[i] > v[i - 1];
    down = down && v[i] < v[i - 1];
  }
  return up || down;
}

void apply_fit(SweepReport& report) {
  if (!strictly_monotone(report.parameters)) {
    report.fitted_slope = std::numeric_limits<double>::quiet_NaN();
    report.residual = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  const SlopeFit fit = fit_loglog(report.parameters, report.observed);
  report.fitted_slope = fit.slope;
  report.residual = fit.residual;
}

}  // namespace

SlopeFit fit_loglog(std::span<const double> parameters, std::span<const double> observed) {
  if (parameters.size() != observed.size() || parameters.size() < 2) {
    throw PreconditionError("slope fit needs at least two paired points");
  }
  if (!strictly_monotone(parameters)) {
    throw PreconditionError("sweep parameters must be strictly monotone");
  }
  const std::size_t n = parameters.size();
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(parameters[i] > 0.0) || !(observed[i] > 0.0)) {
      throw PreconditionError("log-log fit needs strictly positive values");
    }
    x[i] = std::log(parameters[i]);
    y[i] = std::log(observed[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    fit.residual = std::max(fit.residual, std::abs(y[i] - (fit.intercept + fit.slope * x[i])));
  }
  return fit;
}

std::vector<double> geometric_sequence(double start, double ratio, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(start * std::pow(ratio, i));
  return out;
}

double relative_spread(std::span<const double> values) {
  double spread = 0.0;
  if (values.empty()) return spread;
  for (double v : values) spread = std::max(spread, std::abs(v / values.front() - 1.0));
  return spread;
}

SampledFunction closed_form_transform(const GaussianSum& f, const GaussianSum& g, double t,
                                      const Exponent& p, const GridSpec& grid) {
  if (!(t > 0.0)) throw PreconditionError("dilation parameter must be positive");
  if (!(grid.dims() == DimensionPair{1, 1})) {
    throw PreconditionError("the shear family lives on R x R");
  }
  ShearedProduct family{dilate_first_axis(f, t, p), g, 1.0};
  require_support(family.support(), grid, "dilation-shear family");
  const double factor = std::pow(t, -conjugate(p).reciprocal());
  const auto xi = grid.coordinates(Side::frequency);
  const int n = grid.points();
  std::vector<Complex> g_hat(n);
  for (int j = 0; j < n; ++j) {
    const double eta[1] = {xi[j]};
    g_hat[j] = g.transform_value(eta);
  }
  SampledFunction out(grid, Side::frequency);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u[1] = {(xi[i] + xi[j]) / t};
      out[static_cast<std::size_t>(i) * n + j] = g_hat[j] * factor * f.transform_value(u);
    }
  }
  return out;
}

GridSpec blowup_grid(const GaussianSum& f, const GaussianSum& g, double t, const Exponent& p) {
  const ShearedProduct family{dilate_first_axis(f, t, p), g, 1.0};
  return fit_grid({1, 1}, family.support(), 16, 1.0);
}

SweepReport blowup_sweep(const Exponent& p, const Exponent& s, const std::vector<double>& t_values,
                         const BlowupOptions& options) {
  if (s < Exponent(1) || s > p || p > Exponent(2)) {
    throw PreconditionError("blowup sweep needs 1 <= s <= p <= 2 (got p=" + p.to_string() +
                            ", s=" + s.to_string() + ")");
  }
  for (double t : t_values) {
    if (!(t > 0.0) || t > 1.0) throw PreconditionError("dilation parameters must lie in (0,1]");
  }
  SweepReport report;
  report.kind = "blowup";
  report.parameters = t_values;
  const std::size_t n = t_values.size();
  report.observed.resize(n);
  report.rhs.resize(n);
  report.oracle_error.assign(n, 0.0);
  report.grids.assign(n, GridSpec({1, 1}, 2, 1.0));
  const Exponent pc = conjugate(p);
  const Exponent sc = conjugate(s);

  parallel_for(
      n,
      [&](std::size_t k) {
        const double t = t_values[k];
        const GridSpec grid = blowup_grid(options.f, options.g, t, p);
        const ShearedProduct family{dilate_first_axis(options.f, t, p), options.g, 1.0};
        const SampledFunction space = sample(family, grid);
        const SampledFunction spectrum = fourier(space);
        const double lhs = mixed_norm(spectrum, pc, sc);
        const double rhs = mixed_norm(space, p, s);
        report.observed[k] = lhs / rhs;
        report.rhs[k] = rhs;
        report.grids[k] = grid;
        if (options.check_oracle) {
          report.oracle_error[k] = max_abs_difference(
              spectrum, closed_form_transform(options.f, options.g, t, p, grid));
        }
      },
      options.workers);

  report.expected_slope = sc.reciprocal() - pc.reciprocal();
  apply_fit(report);
  report.config = {{"p", p.to_string()}, {"s", s.to_string()}};
  return report;
}

SweepReport delta_divergence_demo(const Exponent& p, const std::vector<double>& epsilon_values,
                                  const DeltaOptions& options) {
  if (p <= Exponent(1) || p > Exponent(2)) {
    throw PreconditionError("delta demo needs p in (1,2], got " + p.to_string());
  }
  if (options.f.rank() != 1) throw PreconditionError("delta demo needs a function on R");
  SweepReport report;
  report.kind = options.shear ? "delta" : "delta-control";
  report.parameters = epsilon_values;
  const std::size_t n = epsilon_values.size();
  report.observed.resize(n);
  report.rhs.resize(n);
  report.grids.assign(n, GridSpec({1, 1}, 2, 1.0));
  const Exponent pc = conjugate(p);

  parallel_for(
      n,
      [&](std::size_t k) {
        const double eps = epsilon_values[k];
        ShearedProduct family = near_delta_function(options.f, eps);
        if (!options.shear) family.shear = 0.0;
        const GridSpec grid = fit_grid({1, 1}, family.support(), 16, 1.0);
        const SampledFunction space =
            options.shear ? near_delta_family(grid, options.f, eps) : sample(family, grid);
        const SampledFunction spectrum = fourier(space);
        const double lhs = mixed_norm(spectrum, pc, Exponent::infinity());
        const double rhs = mixed_norm(space, p, Exponent(1));
        report.observed[k] = lhs / rhs;
        report.rhs[k] = rhs;
        report.grids[k] = grid;
      },
      options.workers);

  // Continuum leading order for a Gaussian f: eps^{-1/p'} (sheared), flat (control).
  report.expected_slope = options.shear ? -pc.reciprocal() : 0.0;
  apply_fit(report);
  report.config = {{"p", p.to_string()}, {"shear", options.shear}};
  return report;
}

bool divergence_milestone(const SweepReport& report) {
  const auto& v = report.observed;
  if (v.size() < 2) return false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return v.back() >= 2.0 * v.front();
}

double predicted_necessity_slope(const ExponentTuple& x, DilationGroup group, DimensionPair dims) {
  if (group == DilationGroup::first) {
    return dims.d1 * (x.r.reciprocal() - (1.0 - x.p.reciprocal() - x.q.reciprocal()));
  }
  return dims.d2 * (x.s.reciprocal() + x.t.reciprocal() - 1.0);
}

SweepReport necessity_sweep(const ExponentTuple& tuple, const std::vector<double>& lambda_values,
                            DilationGroup group, const NecessityOptions& options) {
  const DimensionPair dims = options.dims;
  if (dims.d1 < 1 || dims.d2 < 1) throw PreconditionError("necessity sweep needs d1, d2 >= 1");
  const int rank = dims.total();
  const GaussianSum f = options.f.is_zero() ? GaussianSum::product(std::vector<double>(rank, 1.0))
                                            : options.f;
  const GaussianSum g = options.g.is_zero() ? GaussianSum::product(std::vector<double>(rank, 1.5))
                                            : options.g;
  if (f.rank() != rank || g.rank() != rank) {
    throw PreconditionError("necessity functions must match d1 + d2");
  }
  for (double l : lambda_values) {
    if (!(l > 0.0)) throw PreconditionError("dilation parameters must be positive");
  }
  const int first_axis = group == DilationGroup::first ? 0 : dims.d1;
  const int count = group == DilationGroup::first ? dims.d1 : dims.d2;
  const auto dilate = [&](const GaussianSum& h, double l) {
    return h.dilated(first_axis, count, l, 1.0);
  };

  SupportRequirement need;
  for (double l : lambda_values) {
    const GaussianSum fl = dilate(f, l);
    const GaussianSum gl = dilate(g, l);
    need.merge(fl.support()).merge(gl.support()).merge((fl * gl).support());
  }
  const GridSpec grid = fit_grid(dims, need, 16, 1.0);

  SweepReport report;
  report.kind = group == DilationGroup::first ? "necessity-first" : "necessity-second";
  report.parameters = lambda_values;
  const std::size_t n = lambda_values.size();
  report.observed.resize(n);
  report.rhs.resize(n);
  report.grids.assign(n, grid);
  parallel_for(
      n,
      [&](std::size_t k) {
        const double l = lambda_values[k];
        const BilinearTerms terms =
            bilinear_terms(sample(dilate(f, l), grid), sample(dilate(g, l), grid), tuple);
        report.rhs[k] = terms.norm_f * terms.norm_g;
        report.observed[k] = terms.lhs / report.rhs[k];
      },
      options.workers);

  report.expected_slope = predicted_necessity_slope(tuple, group, dims);
  apply_fit(report);
  report.config = {{"tuple", exponents_to_json(tuple)},
                   {"group", group == DilationGroup::first ? "first" : "second"},
                   {"admissible", static_cast<bool>(admissible(tuple))}};
  return report;
}

bool slope_within(const SweepReport& report, double tolerance) {
  return std::isfinite(report.fitted_slope) &&
         std::abs(report.fitted_slope - report.expected_slope) <= tolerance;
}

}  // namespace mixnorm
