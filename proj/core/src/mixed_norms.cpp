#include "mixnorm/mixed_norms.hpp"

#include <algorithm>
#include <cmath>

#include "mixnorm/errors.hpp"

namespace mixnorm {

double weighted_norm(std::span<const double> m, double cell, const Exponent& a) {
  double peak = 0.0;
  for (double v : m) peak = std::max(peak, v);
  if (a.is_infinite() || peak == 0.0) return peak;
  const double rec = a.reciprocal();
  double sum = 0.0;
  if (rec == 1.0) {
    for (double v : m) sum += v;
    return cell * sum;
  }
  if (rec == 0.5) {
    for (double v : m) sum += (v / peak) * (v / peak);
    return peak * std::sqrt(cell * sum);
  }
  const double power = a.value();
  for (double v : m) {
    if (v > 0.0) sum += std::pow(v / peak, power);
  }
  return peak * std::pow(cell * sum, rec);
}

double mixed_norm(const SampledFunction& f, const MixedNormSpec& spec) {
  if (spec.outer == AxisGroup::all) throw PreconditionError("outer group must be first or second");
  const GridSpec& grid = f.grid();
  const std::size_t rows = grid.group_size(AxisGroup::first);
  const std::size_t cols = grid.group_size(AxisGroup::second);
  const AxisGroup inner = spec.inner();
  const std::size_t outer_count = spec.outer == AxisGroup::first ? rows : cols;
  const std::size_t inner_count = spec.outer == AxisGroup::first ? cols : rows;

  std::vector<double> inner_norms(outer_count);
  std::vector<double> slice(inner_count);
  for (std::size_t o = 0; o < outer_count; ++o) {
    for (std::size_t i = 0; i < inner_count; ++i) {
      const std::size_t flat = spec.outer == AxisGroup::first ? f.index(o, i) : f.index(i, o);
      slice[i] = std::abs(f[flat]);
    }
    inner_norms[o] = weighted_norm(slice, f.cell_measure(inner), spec.inner_exponent);
  }
  return weighted_norm(inner_norms, f.cell_measure(spec.outer), spec.outer_exponent);
}

double plain_norm(const SampledFunction& f, const Exponent& a) {
  std::vector<double> m(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) m[i] = std::abs(f[i]);
  return weighted_norm(m, f.cell_measure(AxisGroup::all), a);
}

MinkowskiComparison minkowski_compare(const SampledFunction& f, const Exponent& a_first,
                                      const Exponent& b_second) {
  const bool real = std::all_of(f.values().begin(), f.values().end(),
                                [](const Complex& z) { return z.imag() == 0.0; });
  if (real && std::any_of(f.values().begin(), f.values().end(),
                          [](const Complex& z) { return z.real() < 0.0; })) {
    throw PreconditionError("Minkowski comparison needs nonnegative values");
  }
  const double first_outer = mixed_norm(f, a_first, b_second);
  const double second_outer = reversed_mixed_norm(f, b_second, a_first);
  MinkowskiComparison out{};
  if (a_first >= b_second) {
    out.larger_outer = first_outer;
    out.smaller_outer = second_outer;
  } else {
    out.larger_outer = second_outer;
    out.smaller_outer = first_outer;
  }
  out.holds = out.larger_outer <= out.smaller_outer + 1e-10;
  return out;
}

HolderComparison holder_compare(const SampledFunction& f, const SampledFunction& g,
                                const Exponent& p, const Exponent& s, const Exponent& q,
                                const Exponent& t) {
  const HolderExponents uv = holder_exponents(p, q, s, t);
  HolderComparison out;
  out.product_norm = mixed_norm(pointwise_product(f, g), uv.u, uv.v);
  out.bound = mixed_norm(f, p, s) * mixed_norm(g, q, t);
  out.degenerate = !(out.bound > 0.0);
  out.ratio = out.degenerate ? 0.0 : out.product_norm / out.bound;
  return out;
}

}  // namespace mixnorm
