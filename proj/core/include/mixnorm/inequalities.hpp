#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"
#include "mixnorm/parallel.hpp"

namespace mixnorm {

enum class InequalityId { restriction, bilinear, variant, same_order, hausdorff_young };

// Command-line names: restriction, bilinear, variant, same-order,
// hausdorff-young.
const char* to_string(InequalityId id);
InequalityId inequality_from_string(const std::string& name);

// Tolerance policy.
inline constexpr double kRandomTolerance = 1e-2;
inline constexpr double kGaussianTolerance = 1e-3;
inline constexpr double kPlancherelTolerance = 1e-6;

struct RatioReport {
  InequalityId id = InequalityId::restriction;
  double lhs = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool degenerate = false;
  nlohmann::json trial = nlohmann::json::object();  // exponents, functions, grid
};

// A space-side function together with its full transform.
struct TrialFunction {
  SampledFunction space;
  SampledFunction spectrum;
  nlohmann::json descriptor;
};

TrialFunction make_trial(SampledFunction f, nlohmann::json descriptor = nullptr);

// ||F^(., 0)||_{p'} <= C_p^{d1} ||F||_{L^p L^1}, p in [1,2].
RatioReport check_restriction(const TrialFunction& f, const Exponent& p, double tolerance);

// ||(FG)^(., 0)||_{r} <= C_{r'}^{d1} ||F||_{p,s} ||G||_{q,t} for admissible
// tuples. Throws PreconditionError naming the violated relation otherwise.
RatioReport check_bilinear(const SampledFunction& f, const SampledFunction& g,
                           const ExponentTuple& tuple, double tolerance);

// ||F^||_{L^{s'}_{xi''} L^{p'}_{xi'}} <= C_p^{d1} C_s^{d2} ||F||_{L^p L^s},
// p, s in [1,2].
RatioReport check_variant(const TrialFunction& f, const Exponent& p, const Exponent& s,
                          double tolerance);

// Same-order version ||F^||_{L^{p'}_{xi'} L^{s'}_{xi''}}; needs p <= s.
RatioReport check_same_order(const TrialFunction& f, const Exponent& p, const Exponent& s,
                             double tolerance);

// ||f^||_{p'} <= C_p^n ||f||_p on a single-group (d2 = 0) grid.
RatioReport check_hausdorff_young(const TrialFunction& f, const Exponent& p, double tolerance);

// Ungated pieces of the bilinear inequality.
struct BilinearTerms {
  double lhs = 0.0;       // ||(FG)^(., 0)||_{L^r}
  double norm_f = 0.0;    // ||F||_{p,s}
  double norm_g = 0.0;    // ||G||_{q,t}
  double holder_bound = 0.0;  // C_{r'}^{d1} ||FG||_{L^u L^1}; 0 when r < 2
};

BilinearTerms bilinear_terms(const SampledFunction& f, const SampledFunction& g,
                             const ExponentTuple& tuple);

// One exponent selection of a suite: (p) for restriction / Hausdorff-Young,
// (p, s) for the variant and same-order checks, a tuple for the bilinear one.
struct ExponentChoice {
  Exponent p = 2;
  Exponent s = 2;
  std::optional<ExponentTuple> tuple;
};

// {1, 4/3, 3/2, 2}.
std::vector<Exponent> standard_exponents();
// Random tuples satisfying 1/s + 1/t = 1 and 1/r = 1 - 1/p - 1/q exactly,
// with r >= 2; reciprocals drawn from small-denominator rationals.
std::vector<ExponentTuple> random_admissible_tuples(int count, std::uint64_t seed);
// Every selection allowed by the hypotheses of `id`.
std::vector<ExponentChoice> default_choices(InequalityId id, std::uint64_t seed);

struct SuiteOptions {
  GridSpec grid{{1, 1}, 256, 16.0};
  int trials = 100;
  std::uint64_t seed = 20150825;
  int complexity = 8;
  double tolerance = kRandomTolerance;
  unsigned workers = default_workers();
};

// Seed of the k-th random function of a suite.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

// Runs options.trials random-ensemble trials, each evaluated at every
// choice. Reports are ordered trial-major and are independent of the
// number of workers.
std::vector<RatioReport> random_suite(InequalityId id, const std::vector<ExponentChoice>& choices,
                                      const SuiteOptions& options);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t degenerate = 0;
  double max_ratio = 0.0;

  bool ok() const noexcept { return failed == 0 && passed > 0; }
};

SuiteSummary summarize(const std::vector<RatioReport>& reports);

}  // namespace mixnorm
