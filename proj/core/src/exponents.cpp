#include "mixnorm/exponents.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "mixnorm/errors.hpp"

namespace mixnorm {
namespace {

constexpr double kFloatTolerance = 1e-12;

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return out;
}

// "12.375" -> 12375/1000, exact for up to 15 fractional digits.
std::optional<Rational> parse_decimal(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = s.substr(dot + 1);
  if (frac.size() > 15 || (whole.empty() && frac.empty())) return std::nullopt;
  for (char c : frac) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const auto w = whole.empty() ? std::optional<std::int64_t>(0) : parse_int(whole);
  const auto f = frac.empty() ? std::optional<std::int64_t>(0) : parse_int(frac);
  if (!w || !f || *w < 0) return std::nullopt;
  return Rational(*w) + Rational(*f, scale);
}

bool close(double a, double b) { return std::abs(a - b) <= kFloatTolerance; }

}  // namespace

Exponent Exponent::infinity() { return Exponent(0.0, Rational(0)); }

Exponent Exponent::from_rational(const Rational& value) {
  if (value < Rational(1)) {
    throw PreconditionError("exponent " + value.to_string() + " is below 1");
  }
  const Rational rec = Rational(1) / value;
  return Exponent(rec.to_double(), rec);
}

Exponent Exponent::from_reciprocal(const Rational& reciprocal) {
  if (reciprocal < Rational(0) || reciprocal > Rational(1)) {
    throw PreconditionError("reciprocal exponent " + reciprocal.to_string() +
                            " is outside [0,1]");
  }
  return Exponent(reciprocal.to_double(), reciprocal);
}

Exponent Exponent::from_double(double value) {
  if (std::isnan(value) || value < 1.0) {
    throw PreconditionError("exponent " + std::to_string(value) + " is below 1");
  }
  if (std::isinf(value)) return infinity();
  if (value == std::floor(value) && value < 1e9) {
    return from_rational(Rational(static_cast<std::int64_t>(value)));
  }
  return Exponent(1.0 / value, std::nullopt);
}

Exponent Exponent::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s == "inf" || s == "infinity" || s == "oo" || s == "Inf" || s == "INF") {
    return infinity();
  }
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const auto num = parse_int(std::string_view(s).substr(0, slash));
    const auto den = parse_int(std::string_view(s).substr(slash + 1));
    if (!num || !den || *den == 0) {
      throw PreconditionError("cannot parse exponent '" + s + "'");
    }
    return from_rational(Rational(*num, *den));
  }
  if (const auto n = parse_int(s)) return from_rational(Rational(*n));
  if (const auto d = parse_decimal(s)) return from_rational(*d);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw PreconditionError("cannot parse exponent '" + s + "'");
  }
  return from_double(v);
}

double Exponent::value() const noexcept {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  if (exact_) return static_cast<double>(exact_->den()) / static_cast<double>(exact_->num());
  return 1.0 / reciprocal_;
}

std::string Exponent::to_string() const {
  if (is_infinite()) return "inf";
  if (exact_) return (Rational(1) / *exact_).to_string();
  std::ostringstream out;
  out.precision(17);
  out << value();
  return out.str();
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return close(a.reciprocal_, b.reciprocal_);
}

bool operator<(const Exponent& a, const Exponent& b) {
  if (a.exact_reciprocal() && b.exact_reciprocal()) {
    return *a.exact_reciprocal() > *b.exact_reciprocal();
  }
  return a.reciprocal() > b.reciprocal() + kFloatTolerance;
}

Exponent conjugate(const Exponent& e) {
  if (const auto& rec = e.exact_reciprocal()) {
    return Exponent::from_reciprocal(Rational(1) - *rec);
  }
  const double rec = 1.0 - e.reciprocal();
  if (rec <= 0.0) return Exponent::infinity();
  return Exponent::from_double(1.0 / rec);
}

double beckner_constant(const Exponent& r) {
  if (r < Exponent(1) || r > Exponent(2)) {
    throw PreconditionError("Beckner constant needs r in [1,2], got " + r.to_string());
  }
  if (r == Exponent(1) || r == Exponent(2)) return 1.0;
  // With rho = 1/r: r^{1/2r} = exp(-rho/2 ln rho) and
  // (r')^{-1/2r'} = exp((1-rho)/2 ln(1-rho)).
  const double rho = r.reciprocal();
  return std::exp(-0.5 * rho * std::log(rho) + 0.5 * (1.0 - rho) * std::log1p(-rho));
}

double beckner_power(const Exponent& r, int n) {
  if (n < 0) throw PreconditionError("dimension must be non-negative");
  const double c = beckner_constant(r);
  if (c == 1.0 || n == 0) return 1.0;
  return std::pow(c, n);
}

std::string ExponentTuple::to_string() const {
  return "(" + p.to_string() + "," + s.to_string() + ";" + q.to_string() + "," +
         t.to_string() + ";" + r.to_string() + ")";
}

Admissibility admissible(const ExponentTuple& x) {
  const auto& ps = x.p.exact_reciprocal();
  const auto& ss = x.s.exact_reciprocal();
  const auto& qs = x.q.exact_reciprocal();
  const auto& ts = x.t.exact_reciprocal();
  const auto& rs = x.r.exact_reciprocal();

  const bool st_ok = (ss && ts) ? (*ss + *ts == Rational(1))
                                : close(x.s.reciprocal() + x.t.reciprocal(), 1.0);
  if (!st_ok) return {false, "s-t-relation"};

  const bool r_ok = (ps && qs && rs)
                        ? (*rs == Rational(1) - *ps - *qs)
                        : close(x.r.reciprocal(), 1.0 - x.p.reciprocal() - x.q.reciprocal());
  if (!r_ok) return {false, "r-relation"};

  if (x.r < Exponent(2)) return {false, "r-range"};
  return {true, {}};
}

namespace {

Exponent reciprocal_sum(const Exponent& a, const Exponent& b, const char* what) {
  if (a.exact_reciprocal() && b.exact_reciprocal()) {
    const Rational sum = *a.exact_reciprocal() + *b.exact_reciprocal();
    if (sum > Rational(1)) {
      throw PreconditionError(std::string("Hoelder exponent ") + what + " would be below 1");
    }
    return Exponent::from_reciprocal(sum);
  }
  const double sum = a.reciprocal() + b.reciprocal();
  if (sum > 1.0 + kFloatTolerance) {
    throw PreconditionError(std::string("Hoelder exponent ") + what + " would be below 1");
  }
  if (sum <= 0.0) return Exponent::infinity();
  return Exponent::from_double(1.0 / std::min(sum, 1.0));
}

}  // namespace

HolderExponents holder_exponents(const Exponent& p, const Exponent& q,
                                 const Exponent& s, const Exponent& t) {
  return {reciprocal_sum(p, q, "u"), reciprocal_sum(s, t, "v")};
}

}  // namespace mixnorm
