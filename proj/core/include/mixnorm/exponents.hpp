#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mixnorm/rational.hpp"

namespace mixnorm {

// A Lebesgue exponent in [1, inf]. The reciprocal is the primary
// representation: it is exact (rational) whenever the exponent was built
// from an integer, a fraction, a terminating decimal, or "inf".
class Exponent {
 public:
  static Exponent infinity();
  static Exponent from_rational(const Rational& value);
  static Exponent from_reciprocal(const Rational& reciprocal);
  // Floating exponents lose exactness; +inf maps to infinity().
  static Exponent from_double(double value);
  // Accepts "3", "4/3", "1.5", "inf" (also "infinity", "oo").
  static Exponent parse(std::string_view text);

  Exponent() : Exponent(from_rational(Rational(2))) {}
  Exponent(int value) : Exponent(from_rational(Rational(value))) {}

  bool is_infinite() const noexcept { return reciprocal_ == 0.0; }
  bool is_exact() const noexcept { return exact_.has_value(); }
  double value() const noexcept;
  double reciprocal() const noexcept { return reciprocal_; }
  const std::optional<Rational>& exact_reciprocal() const noexcept { return exact_; }
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b);

 private:
  Exponent(double reciprocal, std::optional<Rational> exact)
      : reciprocal_(reciprocal), exact_(std::move(exact)) {}

  double reciprocal_;
  std::optional<Rational> exact_;
};

bool operator<(const Exponent& a, const Exponent& b);
inline bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
inline bool operator<=(const Exponent& a, const Exponent& b) { return !(b < a); }
inline bool operator>=(const Exponent& a, const Exponent& b) { return !(a < b); }

// r' = r/(r-1); 1' = inf and inf' = 1.
Exponent conjugate(const Exponent& e);

// Beckner's sharp Hausdorff-Young constant r^{1/2r} (r')^{-1/2r'} for r in
// [1,2]; exactly 1 at both endpoints. Throws PreconditionError otherwise.
double beckner_constant(const Exponent& r);
// beckner_constant(r)^n, n >= 0.
double beckner_power(const Exponent& r, int n);

struct DimensionPair {
  int d1 = 1;
  int d2 = 1;

  int total() const noexcept { return d1 + d2; }
  friend bool operator==(const DimensionPair&, const DimensionPair&) = default;
};

// (p, s; q, t; r): outer/inner exponents of F, outer/inner exponents of G,
// and the target exponent of the restricted bilinear transform.
struct ExponentTuple {
  Exponent p, s, q, t, r;

  std::string to_string() const;
};

struct Admissibility {
  bool admissible = false;
  // Empty when admissible; otherwise "s-t-relation", "r-relation" or
  // "r-range", naming the first violated condition.
  std::string reason;

  explicit operator bool() const noexcept { return admissible; }
};

// 1/s + 1/t = 1, 1/r = 1 - 1/p - 1/q, r >= 2. Exact on rational
// reciprocals, 1e-12 tolerance otherwise.
Admissibility admissible(const ExponentTuple& tuple);

struct HolderExponents {
  Exponent u;  // 1/u = 1/p + 1/q
  Exponent v;  // 1/v = 1/s + 1/t
};

// Exponents of the product FG when F is in L^pL^s and G in L^qL^t.
// Throws PreconditionError when a reciprocal sum exceeds 1.
HolderExponents holder_exponents(const Exponent& p, const Exponent& q,
                                 const Exponent& s, const Exponent& t);

}  // namespace mixnorm
