#pragma once

#include <stdexcept>
#include <string>

namespace mixnorm {

// A caller-side precondition failed: exponent out of range, inadmissible
// tuple, axis/side mismatch. The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The grid cannot resolve the requested function. `required_extent` and
// `required_points` describe a grid that would work (0 when unknown).
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, double required_extent = 0.0,
                  int required_points = 0)
      : std::runtime_error(what),
        required_extent_(required_extent),
        required_points_(required_points) {}

  double required_extent() const noexcept { return required_extent_; }
  int required_points() const noexcept { return required_points_; }

 private:
  double required_extent_;
  int required_points_;
};

}  // namespace mixnorm
