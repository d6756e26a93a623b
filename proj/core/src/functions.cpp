#include "mixnorm/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mixnorm/errors.hpp"

namespace mixnorm {
namespace {

constexpr double kPi = std::numbers::pi;

Complex cis(double turns) {
  const double angle = 2.0 * kPi * turns;
  return {std::cos(angle), std::sin(angle)};
}

double space_radius(double scale) { return std::sqrt(kSupportDecay / (kPi * scale)); }
double frequency_radius(double scale) { return std::sqrt(kSupportDecay * scale / kPi); }

void check_atom(const GaussianAtom& atom, int rank) {
  if (atom.rank() != rank || static_cast<int>(atom.center.size()) != rank ||
      static_cast<int>(atom.modulation.size()) != rank) {
    throw PreconditionError("Gaussian atom rank mismatch");
  }
  for (double a : atom.scale) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw PreconditionError("Gaussian scale must be positive");
    }
  }
}

bool is_five_smooth(int n) {
  for (int p : {2, 3, 5}) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

}  // namespace

SupportRequirement& SupportRequirement::merge(const SupportRequirement& o) {
  half_extent = std::max(half_extent, o.half_extent);
  half_bandwidth = std::max(half_bandwidth, o.half_bandwidth);
  return *this;
}

GaussianSum::GaussianSum(int rank, std::vector<GaussianAtom> atoms) : rank_(rank) {
  for (auto& a : atoms) add(std::move(a));
}

GaussianSum GaussianSum::product(std::vector<double> scales, Complex amplitude) {
  const int rank = static_cast<int>(scales.size());
  GaussianAtom atom;
  atom.amplitude = amplitude;
  atom.center.assign(rank, 0.0);
  atom.modulation.assign(rank, 0.0);
  atom.scale = std::move(scales);
  GaussianSum out(rank);
  out.add(std::move(atom));
  return out;
}

void GaussianSum::add(GaussianAtom atom) {
  check_atom(atom, rank_);
  atoms_.push_back(std::move(atom));
}

Complex GaussianSum::value(std::span<const double> x) const {
  Complex sum{0.0, 0.0};
  for (const auto& atom : atoms_) {
    double exponent = 0.0;
    double turns = 0.0;
    for (int i = 0; i < rank_; ++i) {
      const double d = x[i] - atom.center[i];
      exponent -= kPi * atom.scale[i] * d * d;
      turns += atom.modulation[i] * x[i];
    }
    sum += atom.amplitude * std::exp(exponent) * cis(turns);
  }
  return sum;
}

Complex GaussianSum::transform_value(std::span<const double> xi) const {
  Complex sum{0.0, 0.0};
  for (const auto& atom : atoms_) {
    double exponent = 0.0;
    double turns = 0.0;
    double norm = 1.0;
    for (int i = 0; i < rank_; ++i) {
      const double d = xi[i] - atom.modulation[i];
      exponent -= kPi * d * d / atom.scale[i];
      turns -= atom.center[i] * d;
      norm /= std::sqrt(atom.scale[i]);
    }
    sum += atom.amplitude * norm * std::exp(exponent) * cis(turns);
  }
  return sum;
}

GaussianSum GaussianSum::dilated(int first_axis, int count, double t, double amplitude) const {
  if (!(t > 0.0)) throw PreconditionError("dilation parameter must be positive");
  if (first_axis < 0 || count < 0 || first_axis + count > rank_) {
    throw PreconditionError("dilation axes out of range");
  }
  GaussianSum out = *this;
  for (auto& atom : out.atoms_) {
    atom.amplitude *= amplitude;
    for (int i = first_axis; i < first_axis + count; ++i) {
      atom.scale[i] *= t * t;
      atom.center[i] /= t;
      atom.modulation[i] *= t;
    }
  }
  return out;
}

GaussianSum GaussianSum::scaled(Complex c) const {
  GaussianSum out = *this;
  for (auto& atom : out.atoms_) atom.amplitude *= c;
  return out;
}

GaussianSum GaussianSum::operator*(const GaussianSum& other) const {
  if (other.rank_ != rank_) throw PreconditionError("product of sums of different rank");
  GaussianSum out(rank_);
  for (const auto& a : atoms_) {
    for (const auto& b : other.atoms_) {
      GaussianAtom c;
      c.amplitude = a.amplitude * b.amplitude;
      c.center.resize(rank_);
      c.scale.resize(rank_);
      c.modulation.resize(rank_);
      double exponent = 0.0;
      for (int i = 0; i < rank_; ++i) {
        const double s = a.scale[i] + b.scale[i];
        const double gap = a.center[i] - b.center[i];
        c.scale[i] = s;
        c.center[i] = (a.scale[i] * a.center[i] + b.scale[i] * b.center[i]) / s;
        c.modulation[i] = a.modulation[i] + b.modulation[i];
        exponent -= kPi * a.scale[i] * b.scale[i] / s * gap * gap;
      }
      c.amplitude *= std::exp(exponent);
      out.atoms_.push_back(std::move(c));
    }
  }
  return out;
}

GaussianSum GaussianSum::tensor(const GaussianSum& other) const {
  GaussianSum out(rank_ + other.rank_);
  for (const auto& a : atoms_) {
    for (const auto& b : other.atoms_) {
      GaussianAtom c;
      c.amplitude = a.amplitude * b.amplitude;
      c.center = a.center;
      c.center.insert(c.center.end(), b.center.begin(), b.center.end());
      c.scale = a.scale;
      c.scale.insert(c.scale.end(), b.scale.begin(), b.scale.end());
      c.modulation = a.modulation;
      c.modulation.insert(c.modulation.end(), b.modulation.begin(), b.modulation.end());
      out.atoms_.push_back(std::move(c));
    }
  }
  return out;
}

SupportRequirement GaussianSum::support() const {
  SupportRequirement need;
  for (const auto& atom : atoms_) {
    for (int i = 0; i < rank_; ++i) {
      need.half_extent =
          std::max(need.half_extent, std::abs(atom.center[i]) + space_radius(atom.scale[i]));
      need.half_bandwidth = std::max(
          need.half_bandwidth, std::abs(atom.modulation[i]) + frequency_radius(atom.scale[i]));
    }
  }
  return need;
}

double GaussianSum::min_inside_mass_fraction(double extent) const {
  double worst = 1.0;
  for (const auto& atom : atoms_) {
    double fraction = 1.0;
    for (int i = 0; i < rank_; ++i) {
      // |atom|^2 ~ exp(-2 pi a (x-c)^2); erf argument sqrt(2 pi a) (x-c).
      const double k = std::sqrt(2.0 * kPi * atom.scale[i]);
      const double hi = k * (0.5 * extent - atom.center[i]);
      const double lo = k * (-0.5 * extent - atom.center[i]);
      fraction *= 0.5 * (std::erf(hi) - std::erf(lo));
    }
    worst = std::min(worst, fraction);
  }
  return worst;
}

Complex ShearedProduct::value(double x, double y) const {
  const double u[1] = {x};
  const double v[1] = {y - shear * x};
  return first.value(u) * second.value(v);
}

Complex ShearedProduct::transform_value(double xi, double eta) const {
  const double u[1] = {xi + shear * eta};
  const double v[1] = {eta};
  return second.transform_value(v) * first.transform_value(u);
}

SupportRequirement ShearedProduct::support() const {
  if (first.rank() != 1 || second.rank() != 1) {
    throw PreconditionError("sheared products are defined on R x R");
  }
  const SupportRequirement f = first.support();
  const SupportRequirement g = second.support();
  SupportRequirement need;
  need.half_extent = std::max(f.half_extent, std::abs(shear) * f.half_extent + g.half_extent);
  need.half_bandwidth =
      std::max(g.half_bandwidth, std::abs(shear) * g.half_bandwidth + f.half_bandwidth);
  return need;
}

void require_support(const SupportRequirement& need, const GridSpec& grid, const char* what) {
  const bool space_ok = need.half_extent <= 0.5 * grid.extent();
  // The largest positive frequency on the grid is (N/2 - 1)/L.
  const double top = (grid.points() / 2 - 1) * grid.frequency_spacing();
  const bool freq_ok = need.half_bandwidth <= top;
  if (space_ok && freq_ok) return;
  const GridSpec fit = fit_grid(grid.dims(), need, grid.points());
  std::ostringstream msg;
  msg << what << " is not resolved by the grid (N=" << grid.points() << ", L=" << grid.extent()
      << "): needs half-extent " << need.half_extent << " and half-bandwidth "
      << need.half_bandwidth << "; minimal adequate grid N=" << fit.points()
      << ", L=" << fit.extent();
  throw ResolutionError(msg.str(), fit.extent(), fit.points());
}

GridSpec fit_grid(DimensionPair dims, const SupportRequirement& need, int min_points,
                  double extent_quantum) {
  double extent = std::ceil(2.0 * need.half_extent / extent_quantum) * extent_quantum;
  extent = std::max(extent, extent_quantum);
  const double wanted = 2.0 * (need.half_bandwidth * extent + 1.0);
  int n = std::max(min_points, static_cast<int>(std::ceil(wanted)));
  if (n % 2 != 0) ++n;
  while (!is_five_smooth(n)) n += 2;
  return GridSpec(dims, n, extent);
}

}  // namespace mixnorm
