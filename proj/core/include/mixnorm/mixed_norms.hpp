#pragma once

#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"

namespace mixnorm {

// Inner norm over the complement of `outer` first, then the outer norm.
// Group-on-side measures come from the function's sides; an exponent of inf
// is a plain maximum.
struct MixedNormSpec {
  AxisGroup outer = AxisGroup::first;
  Exponent outer_exponent;
  Exponent inner_exponent;

  AxisGroup inner() const noexcept {
    return outer == AxisGroup::first ? AxisGroup::second : AxisGroup::first;
  }
};

double mixed_norm(const SampledFunction& f, const MixedNormSpec& spec);

// ||F||_{L^p_{x'} L^s_{x''}}: inner L^s over the second group.
inline double mixed_norm(const SampledFunction& f, const Exponent& outer_first,
                         const Exponent& inner_second) {
  return mixed_norm(f, MixedNormSpec{AxisGroup::first, outer_first, inner_second});
}

// ||F||_{L^s_{x''} L^p_{x'}}: inner L^p over the first group.
inline double reversed_mixed_norm(const SampledFunction& f, const Exponent& outer_second,
                                  const Exponent& inner_first) {
  return mixed_norm(f, MixedNormSpec{AxisGroup::second, outer_second, inner_first});
}

double plain_norm(const SampledFunction& f, const Exponent& a);

// Norm of a finite sample set with uniform cell weight.
double weighted_norm(std::span<const double> magnitudes, double cell, const Exponent& a);

struct MinkowskiComparison {
  double larger_outer;   // the larger exponent is taken last
  double smaller_outer;  // the smaller exponent is taken last
  bool holds;            // larger_outer <= smaller_outer + 1e-10
};

// Compares L^a over the first group against L^b over the second group in
// both orders. Real inputs must be nonnegative (PreconditionError); complex
// inputs are compared through their absolute values.
MinkowskiComparison minkowski_compare(const SampledFunction& f, const Exponent& a_first,
                                      const Exponent& b_second);

struct HolderComparison {
  double product_norm = 0.0;  // ||FG||_{L^u L^v}
  double bound = 0.0;         // ||F||_{p,s} ||G||_{q,t}
  double ratio = 0.0;
  bool degenerate = false;    // zero bound
};

HolderComparison holder_compare(const SampledFunction& f, const SampledFunction& g,
                                const Exponent& p, const Exponent& s, const Exponent& q,
                                const Exponent& t);

}  // namespace mixnorm
