#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mixnorm/exponents.hpp"

namespace mixnorm {

using Complex = std::complex<double>;

enum class Side { space, frequency };
enum class AxisGroup { first, second, all };

const char* to_string(Side side);
const char* to_string(AxisGroup group);

// Uniform product grid on [-L/2, L/2)^{d1+d2} with N points per axis.
// The frequency grid is the centered dual grid with spacing 1/L, so both
// grids contain 0 (N even).
class GridSpec {
 public:
  GridSpec(DimensionPair dims, int points_per_axis, double extent_per_axis);

  const DimensionPair& dims() const noexcept { return dims_; }
  int points() const noexcept { return points_; }
  double extent() const noexcept { return extent_; }
  double spacing() const noexcept { return extent_ / points_; }
  double frequency_spacing() const noexcept { return 1.0 / extent_; }
  double frequency_extent() const noexcept { return points_ / extent_; }
  // Largest |xi| representable on the frequency grid.
  double half_bandwidth() const noexcept { return 0.5 * frequency_extent(); }

  int rank() const noexcept { return dims_.total(); }
  int group_rank(AxisGroup group) const noexcept;
  // Number of samples spanned by a group (1 for an empty group).
  std::size_t group_size(AxisGroup group) const noexcept;
  std::size_t total_size() const noexcept { return group_size(AxisGroup::all); }

  double cell(Side side) const noexcept {
    return side == Side::space ? spacing() : frequency_spacing();
  }
  // Coordinate of index j in [0, N) on one axis.
  double coordinate(Side side, int j) const noexcept {
    return (j - points_ / 2) * cell(side);
  }
  std::vector<double> coordinates(Side side) const;
  // Index of coordinate 0 on any axis.
  int zero_index() const noexcept { return points_ / 2; }

  GridSpec with_dims(DimensionPair dims) const { return GridSpec(dims, points_, extent_); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  DimensionPair dims_;
  int points_;
  double extent_;
};

// Complex samples on a product grid, row-major with the d1 axes first.
// Each axis group carries its own side so partial transforms are
// representable.
class SampledFunction {
 public:
  SampledFunction(GridSpec grid, Side side = Side::space);
  SampledFunction(GridSpec grid, std::vector<Complex> values, Side first_side,
                  Side second_side);

  const GridSpec& grid() const noexcept { return grid_; }
  Side side(AxisGroup group) const;
  void set_side(AxisGroup group, Side side);
  // Measure of one cell of the given group (product of per-axis cells).
  double cell_measure(AxisGroup group) const;

  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Complex& operator[](std::size_t i) noexcept { return values_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return values_[i]; }

  // Flat index of (first-group block, second-group block).
  std::size_t index(std::size_t first_block, std::size_t second_block) const noexcept {
    return first_block * grid_.group_size(AxisGroup::second) + second_block;
  }

  bool all_finite() const noexcept;
  SampledFunction& operator*=(Complex c) noexcept;

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
  Side first_side_;
  Side second_side_;
};

// Pointwise product on a shared grid and side layout.
SampledFunction pointwise_product(const SampledFunction& a, const SampledFunction& b);

// Largest absolute difference; grids must match.
double max_abs_difference(const SampledFunction& a, const SampledFunction& b);

}  // namespace mixnorm
