#include "mixnorm/grid.hpp"

#include <algorithm>
#include <cmath>

#include "mixnorm/errors.hpp"

namespace mixnorm {

const char* to_string(Side side) { return side == Side::space ? "space" : "frequency"; }

const char* to_string(AxisGroup group) {
  switch (group) {
    case AxisGroup::first: return "first";
    case AxisGroup::second: return "second";
    case AxisGroup::all: return "all";
  }
  return "?";
}

GridSpec::GridSpec(DimensionPair dims, int points_per_axis, double extent_per_axis)
    : dims_(dims), points_(points_per_axis), extent_(extent_per_axis) {
  if (dims.d1 < 1 || dims.d2 < 0) {
    throw PreconditionError("grid needs d1 >= 1 and d2 >= 0");
  }
  if (points_per_axis < 2 || points_per_axis % 2 != 0) {
    throw PreconditionError("points per axis must be a positive even integer");
  }
  if (!(extent_per_axis > 0.0) || !std::isfinite(extent_per_axis)) {
    throw PreconditionError("grid extent must be positive");
  }
}

int GridSpec::group_rank(AxisGroup group) const noexcept {
  switch (group) {
    case AxisGroup::first: return dims_.d1;
    case AxisGroup::second: return dims_.d2;
    case AxisGroup::all: return dims_.total();
  }
  return 0;
}

std::size_t GridSpec::group_size(AxisGroup group) const noexcept {
  std::size_t n = 1;
  for (int i = 0; i < group_rank(group); ++i) n *= static_cast<std::size_t>(points_);
  return n;
}

std::vector<double> GridSpec::coordinates(Side side) const {
  std::vector<double> out(points_);
  for (int j = 0; j < points_; ++j) out[j] = coordinate(side, j);
  return out;
}

SampledFunction::SampledFunction(GridSpec grid, Side side)
    : grid_(grid), values_(grid.total_size()), first_side_(side), second_side_(side) {}

SampledFunction::SampledFunction(GridSpec grid, std::vector<Complex> values,
                                 Side first_side, Side second_side)
    : grid_(grid),
      values_(std::move(values)),
      first_side_(first_side),
      second_side_(second_side) {
  if (values_.size() != grid_.total_size()) {
    throw PreconditionError("sample array does not match the grid shape");
  }
}

Side SampledFunction::side(AxisGroup group) const {
  switch (group) {
    case AxisGroup::first: return first_side_;
    case AxisGroup::second: return second_side_;
    case AxisGroup::all:
      if (first_side_ != second_side_ && grid_.dims().d2 > 0) {
        throw PreconditionError("axis groups are on different sides");
      }
      return first_side_;
  }
  return first_side_;
}

void SampledFunction::set_side(AxisGroup group, Side side) {
  if (group != AxisGroup::second) first_side_ = side;
  if (group != AxisGroup::first) second_side_ = side;
}

double SampledFunction::cell_measure(AxisGroup group) const {
  double m = 1.0;
  if (group != AxisGroup::second) m *= std::pow(grid_.cell(first_side_), grid_.dims().d1);
  if (group != AxisGroup::first) m *= std::pow(grid_.cell(second_side_), grid_.dims().d2);
  return m;
}

bool SampledFunction::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

SampledFunction& SampledFunction::operator*=(Complex c) noexcept {
  for (auto& z : values_) z *= c;
  return *this;
}

SampledFunction pointwise_product(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid() == b.grid()) || a.side(AxisGroup::first) != b.side(AxisGroup::first) ||
      a.side(AxisGroup::second) != b.side(AxisGroup::second)) {
    throw PreconditionError("pointwise product needs matching grids and sides");
  }
  SampledFunction out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

double max_abs_difference(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid() == b.grid())) throw PreconditionError("grids differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace mixnorm
