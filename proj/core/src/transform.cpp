#include "mixnorm/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "mixnorm/errors.hpp"

namespace mixnorm {
namespace {

// Axes [begin, end) of the row-major array.
struct AxisRange {
  int begin;
  int end;
};

AxisRange axis_range(const GridSpec& grid, AxisGroup group) {
  switch (group) {
    case AxisGroup::first: return {0, grid.dims().d1};
    case AxisGroup::second: return {grid.dims().d1, grid.rank()};
    case AxisGroup::all: return {0, grid.rank()};
  }
  return {0, 0};
}

using PlanKey = std::tuple<int, int, int, int, int>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const GridSpec& grid, AxisGroup group, Direction direction) {
    const PlanKey key{grid.points(), grid.dims().d1, grid.dims().d2,
                      static_cast<int>(group), static_cast<int>(direction)};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const int n = grid.points();
    const int rank = grid.rank();
    const AxisRange range = axis_range(grid, group);
    std::vector<fftw_iodim> dims;
    std::vector<fftw_iodim> loops;
    std::ptrdiff_t stride = 1;
    std::vector<std::ptrdiff_t> strides(rank);
    for (int axis = rank - 1; axis >= 0; --axis) {
      strides[axis] = stride;
      stride *= n;
    }
    for (int axis = 0; axis < rank; ++axis) {
      fftw_iodim d{n, static_cast<int>(strides[axis]), static_cast<int>(strides[axis])};
      if (axis >= range.begin && axis < range.end) {
        dims.push_back(d);
      } else {
        loops.push_back(d);
      }
    }
    const std::size_t total = grid.total_size();
    auto* buffer = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    const int sign = direction == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = fftw_plan_guru_dft(static_cast<int>(dims.size()), dims.data(),
                                        static_cast<int>(loops.size()), loops.data(), buffer,
                                        buffer, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buffer);
    if (plan == nullptr) throw std::runtime_error("FFTW planner failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

// With x_j = (j - N/2) h and xi_k = (k - N/2)/(N h):
//   exp(-/+ 2 pi i x_j xi_k) = exp(-/+ 2 pi i jk/N) (-1)^j (-1)^k (-1)^{N/2}
// so the centering reduces to a sign ramp on each side of the DFT.
void apply_sign_ramp(std::span<Complex> values, const GridSpec& grid, AxisRange range,
                     bool include_global) {
  const int n = grid.points();
  const int rank = grid.rank();
  const double global = (include_global && (n / 2) % 2 != 0) ? -1.0 : 1.0;
  const double global_all = std::pow(global, range.end - range.begin);
  std::vector<int> index(rank, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    int parity = 0;
    for (int axis = range.begin; axis < range.end; ++axis) parity += index[axis];
    const double sign = (parity % 2 == 0 ? 1.0 : -1.0) * global_all;
    if (sign < 0.0) values[flat] = -values[flat];
    for (int axis = rank - 1; axis >= 0; --axis) {
      if (++index[axis] < n) break;
      index[axis] = 0;
    }
  }
}

}  // namespace

TransformPlan::TransformPlan(GridSpec grid, AxisGroup axes, Direction direction)
    : grid_(grid), axes_(axes), direction_(direction) {}

SampledFunction TransformPlan::apply(SampledFunction f) const {
  if (!(f.grid() == grid_)) throw PreconditionError("transform plan built for another grid");
  const Side from = direction_ == Direction::forward ? Side::space : Side::frequency;
  const Side to = direction_ == Direction::forward ? Side::frequency : Side::space;
  const auto check = [&](AxisGroup g) {
    if (grid_.group_rank(g) > 0 && f.side(g) != from) {
      throw PreconditionError(std::string("axis group '") + to_string(g) + "' is on the " +
                              to_string(f.side(g)) + " side");
    }
  };
  if (axes_ != AxisGroup::second) check(AxisGroup::first);
  if (axes_ != AxisGroup::first) check(AxisGroup::second);

  const AxisRange range = axis_range(grid_, axes_);
  if (range.end > range.begin) {
    auto values = f.values();
    apply_sign_ramp(values, grid_, range, false);
    fftw_plan plan = plan_cache().get(grid_, axes_, direction_);
    auto* data = reinterpret_cast<fftw_complex*>(values.data());
    fftw_execute_dft(plan, data, data);
    apply_sign_ramp(values, grid_, range, true);
    const double cell = grid_.cell(from);
    f *= std::pow(cell, range.end - range.begin);
  }
  f.set_side(axes_, to);
  return f;
}

SampledFunction fourier(SampledFunction f, AxisGroup axes) {
  const GridSpec grid = f.grid();
  return TransformPlan(grid, axes, Direction::forward).apply(std::move(f));
}

SampledFunction inverse_fourier(SampledFunction f, AxisGroup axes) {
  const GridSpec grid = f.grid();
  return TransformPlan(grid, axes, Direction::inverse).apply(std::move(f));
}

SampledFunction slice_second_zero(const SampledFunction& fhat) {
  const GridSpec& grid = fhat.grid();
  if (fhat.side(AxisGroup::first) != Side::frequency ||
      (grid.dims().d2 > 0 && fhat.side(AxisGroup::second) != Side::frequency)) {
    throw PreconditionError("slice needs a fully transformed function");
  }
  // Flat offset of the all-zero index inside the second group.
  std::size_t zero = 0;
  for (int i = 0; i < grid.dims().d2; ++i) zero = zero * grid.points() + grid.zero_index();
  const GridSpec out_grid = grid.with_dims({grid.dims().d1, 0});
  SampledFunction out(out_grid, Side::frequency);
  const std::size_t rows = grid.group_size(AxisGroup::first);
  for (std::size_t i = 0; i < rows; ++i) out[i] = fhat[fhat.index(i, zero)];
  return out;
}

SampledFunction marginal_second(const SampledFunction& f) {
  const GridSpec& grid = f.grid();
  if (grid.dims().d2 > 0 && f.side(AxisGroup::second) != Side::space) {
    throw PreconditionError("marginal needs the second group on the space side");
  }
  const GridSpec out_grid = grid.with_dims({grid.dims().d1, 0});
  SampledFunction out(out_grid, f.side(AxisGroup::first));
  const std::size_t rows = grid.group_size(AxisGroup::first);
  const std::size_t cols = grid.group_size(AxisGroup::second);
  const double weight = f.cell_measure(AxisGroup::second);
  for (std::size_t i = 0; i < rows; ++i) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < cols; ++j) sum += f[f.index(i, j)];
    out[i] = weight * sum;
  }
  return out;
}

}  // namespace mixnorm
