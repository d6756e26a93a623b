#pragma once

#include "mixnorm/grid.hpp"

namespace mixnorm {

enum class Direction { forward, inverse };

// Continuum-normalized DFT on centered grids:
//   forward  F^(xi) ~ h^k   sum_x exp(-2 pi i x.xi) F(x)
//   inverse  F(x)   ~ (1/L)^k sum_xi exp(+2 pi i x.xi) F^(xi)
// over the k axes of the selected group(s). Plans are cached and shared;
// applying one is thread-safe.
class TransformPlan {
 public:
  TransformPlan(GridSpec grid, AxisGroup axes, Direction direction);

  const GridSpec& grid() const noexcept { return grid_; }
  AxisGroup axes() const noexcept { return axes_; }
  Direction direction() const noexcept { return direction_; }

  // Throws PreconditionError on a grid or side mismatch.
  SampledFunction apply(SampledFunction f) const;

 private:
  GridSpec grid_;
  AxisGroup axes_;
  Direction direction_;
};

// Forward transform over the selected axes; those axes must be on the space
// side.
SampledFunction fourier(SampledFunction f, AxisGroup axes = AxisGroup::all);
SampledFunction inverse_fourier(SampledFunction f, AxisGroup axes = AxisGroup::all);

// The hyperplane xi'' = 0 of a fully transformed function, as a function on
// the first-group frequency axes (d2 = 0 grid).
SampledFunction slice_second_zero(const SampledFunction& fhat);

// x' -> int F(x', x'') dx'' (h-weighted sum over the second group).
SampledFunction marginal_second(const SampledFunction& f);

}  // namespace mixnorm
