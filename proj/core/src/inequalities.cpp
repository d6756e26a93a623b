#include "mixnorm/inequalities.hpp"

#include <cmath>
#include <random>

#include "mixnorm/errors.hpp"
#include "mixnorm/mixed_norms.hpp"
#include "mixnorm/report_io.hpp"
#include "mixnorm/sampling.hpp"
#include "mixnorm/transform.hpp"

namespace mixnorm {
namespace {

void require_range(const Exponent& e, const char* name) {
  if (e < Exponent(1) || e > Exponent(2)) {
    throw PreconditionError(std::string(name) + " must lie in [1,2], got " + e.to_string());
  }
}

RatioReport finish(InequalityId id, double lhs, double bound, double tolerance,
                   nlohmann::json trial) {
  RatioReport r;
  r.id = id;
  r.lhs = lhs;
  r.bound = bound;
  r.tolerance = tolerance;
  r.degenerate = !(bound > 0.0) || !std::isfinite(bound) || !std::isfinite(lhs);
  r.ratio = r.degenerate ? 0.0 : lhs / bound;
  r.pass = !r.degenerate && r.ratio <= 1.0 + tolerance;
  r.trial = std::move(trial);
  return r;
}

nlohmann::json trial_json(const GridSpec& grid, nlohmann::json exponents,
                          nlohmann::json functions) {
  return {{"exponents", std::move(exponents)},
          {"functions", std::move(functions)},
          {"grid", grid_to_json(grid)}};
}

nlohmann::json one(const nlohmann::json& d) { return nlohmann::json::array({d}); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

const char* to_string(InequalityId id) {
  switch (id) {
    case InequalityId::restriction: return "restriction";
    case InequalityId::bilinear: return "bilinear";
    case InequalityId::variant: return "variant";
    case InequalityId::same_order: return "same-order";
    case InequalityId::hausdorff_young: return "hausdorff-young";
  }
  return "?";
}

InequalityId inequality_from_string(const std::string& name) {
  for (auto id : {InequalityId::restriction, InequalityId::bilinear,
                  InequalityId::variant, InequalityId::same_order,
                  InequalityId::hausdorff_young}) {
    if (name == to_string(id)) return id;
  }
  throw PreconditionError("unknown inequality '" + name + "'");
}

TrialFunction make_trial(SampledFunction f, nlohmann::json descriptor) {
  SampledFunction spectrum = fourier(f);
  return TrialFunction{std::move(f), std::move(spectrum), std::move(descriptor)};
}

RatioReport check_restriction(const TrialFunction& f, const Exponent& p, double tolerance) {
  require_range(p, "p");
  const GridSpec& grid = f.space.grid();
  const double lhs = plain_norm(slice_second_zero(f.spectrum), conjugate(p));
  const double bound = beckner_power(p, grid.dims().d1) * mixed_norm(f.space, p, Exponent(1));
  return finish(InequalityId::restriction, lhs, bound, tolerance,
                trial_json(grid, {{"p", p.to_string()}}, one(f.descriptor)));
}

BilinearTerms bilinear_terms(const SampledFunction& f, const SampledFunction& g,
                             const ExponentTuple& x) {
  const SampledFunction fg = pointwise_product(f, g);
  BilinearTerms out;
  out.lhs = plain_norm(slice_second_zero(fourier(fg)), x.r);
  out.norm_f = mixed_norm(f, x.p, x.s);
  out.norm_g = mixed_norm(g, x.q, x.t);
  if (x.r >= Exponent(2) && x.p.reciprocal() + x.q.reciprocal() <= 1.0 + 1e-12 &&
      x.s.reciprocal() + x.t.reciprocal() <= 1.0 + 1e-12) {
    const HolderExponents uv = holder_exponents(x.p, x.q, x.s, x.t);
    out.holder_bound = beckner_power(conjugate(x.r), f.grid().dims().d1) *
                       mixed_norm(fg, uv.u, Exponent(1));
  }
  return out;
}

RatioReport check_bilinear(const SampledFunction& f, const SampledFunction& g,
                           const ExponentTuple& tuple, double tolerance) {
  if (const Admissibility a = admissible(tuple); !a) {
    throw PreconditionError("inadmissible exponents " + tuple.to_string() + ": " + a.reason);
  }
  const BilinearTerms terms = bilinear_terms(f, g, tuple);
  const double bound =
      beckner_power(conjugate(tuple.r), f.grid().dims().d1) * terms.norm_f * terms.norm_g;
  RatioReport r = finish(InequalityId::bilinear, terms.lhs, bound, tolerance,
                         trial_json(f.grid(), exponents_to_json(tuple), nlohmann::json::array()));
  r.trial["holder_bound"] = terms.holder_bound;
  return r;
}

RatioReport check_variant(const TrialFunction& f, const Exponent& p, const Exponent& s,
                          double tolerance) {
  require_range(p, "p");
  require_range(s, "s");
  const GridSpec& grid = f.space.grid();
  const double lhs = reversed_mixed_norm(f.spectrum, conjugate(s), conjugate(p));
  const double bound = beckner_power(p, grid.dims().d1) * beckner_power(s, grid.dims().d2) *
                       mixed_norm(f.space, p, s);
  return finish(InequalityId::variant, lhs, bound, tolerance,
                trial_json(grid, {{"p", p.to_string()}, {"s", s.to_string()}},
                           one(f.descriptor)));
}

RatioReport check_same_order(const TrialFunction& f, const Exponent& p, const Exponent& s,
                             double tolerance) {
  require_range(p, "p");
  require_range(s, "s");
  if (p > s) {
    throw PreconditionError("same-order bound needs p <= s (got p=" + p.to_string() +
                            ", s=" + s.to_string() + ")");
  }
  const GridSpec& grid = f.space.grid();
  const double lhs = mixed_norm(f.spectrum, conjugate(p), conjugate(s));
  const double bound = beckner_power(p, grid.dims().d1) * beckner_power(s, grid.dims().d2) *
                       mixed_norm(f.space, p, s);
  return finish(InequalityId::same_order, lhs, bound, tolerance,
                trial_json(grid, {{"p", p.to_string()}, {"s", s.to_string()}},
                           one(f.descriptor)));
}

RatioReport check_hausdorff_young(const TrialFunction& f, const Exponent& p, double tolerance) {
  require_range(p, "p");
  const GridSpec& grid = f.space.grid();
  const double lhs = plain_norm(f.spectrum, conjugate(p));
  const double bound = beckner_power(p, grid.rank()) * plain_norm(f.space, p);
  return finish(InequalityId::hausdorff_young, lhs, bound, tolerance,
                trial_json(grid, {{"p", p.to_string()}}, one(f.descriptor)));
}

std::vector<Exponent> standard_exponents() {
  return {Exponent(1), Exponent::parse("4/3"), Exponent::parse("3/2"), Exponent(2)};
}

std::vector<ExponentTuple> random_admissible_tuples(int count, std::uint64_t seed) {
  const std::vector<Rational> pool = {
      Rational(0),    Rational(1, 8), Rational(1, 6), Rational(1, 4), Rational(1, 3),
      Rational(3, 8), Rational(1, 2), Rational(5, 8), Rational(2, 3), Rational(3, 4),
      Rational(5, 6), Rational(7, 8), Rational(1)};
  std::mt19937_64 engine(seed);
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(engine() % n); };
  std::vector<ExponentTuple> out;
  while (static_cast<int>(out.size()) < count) {
    const Rational rp = pool[pick(pool.size())];
    std::vector<Rational> qs;
    for (const auto& rq : pool) {
      const Rational sum = rp + rq;
      if (sum >= Rational(1, 2) && sum <= Rational(1)) qs.push_back(rq);
    }
    if (qs.empty()) continue;
    const Rational rq = qs[pick(qs.size())];
    const Rational rs = pool[pick(pool.size())];
    ExponentTuple x{Exponent::from_reciprocal(rp), Exponent::from_reciprocal(rs),
                    Exponent::from_reciprocal(rq), Exponent::from_reciprocal(Rational(1) - rs),
                    Exponent::from_reciprocal(Rational(1) - rp - rq)};
    out.push_back(x);
  }
  return out;
}

std::vector<ExponentChoice> default_choices(InequalityId id, std::uint64_t seed) {
  std::vector<ExponentChoice> out;
  const auto exps = standard_exponents();
  switch (id) {
    case InequalityId::restriction:
    case InequalityId::hausdorff_young:
      for (const auto& p : exps) out.push_back({p, Exponent(2), std::nullopt});
      break;
    case InequalityId::variant:
      for (const auto& p : exps)
        for (const auto& s : exps) out.push_back({p, s, std::nullopt});
      break;
    case InequalityId::same_order:
      for (const auto& p : exps)
        for (const auto& s : exps)
          if (p <= s) out.push_back({p, s, std::nullopt});
      break;
    case InequalityId::bilinear:
      for (const auto& x : random_admissible_tuples(10, seed)) out.push_back({x.p, x.s, x});
      break;
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(seed ^ splitmix64(k + 1));
}

std::vector<RatioReport> random_suite(InequalityId id, const std::vector<ExponentChoice>& choices,
                                      const SuiteOptions& options) {
  GridSpec grid = options.grid;
  if (id == InequalityId::hausdorff_young) grid = grid.with_dims({grid.dims().d1, 0});
  const auto n = static_cast<std::size_t>(std::max(0, options.trials));
  std::vector<std::vector<RatioReport>> per_trial(n);

  const auto descriptor = [&](std::uint64_t seed) {
    FunctionDescriptor d{Family::random_ensemble, {{"complexity", options.complexity}}, seed};
    return d;
  };

  parallel_for(
      n,
      [&](std::size_t k) {
        auto& out = per_trial[k];
        const FunctionDescriptor df = descriptor(derive_seed(options.seed, 2 * k));
        SampledFunction f = sample(df, grid);
        if (id == InequalityId::bilinear) {
          const FunctionDescriptor dg = descriptor(derive_seed(options.seed, 2 * k + 1));
          const SampledFunction g = sample(dg, grid);
          for (const auto& c : choices) {
            if (!c.tuple) throw PreconditionError("bilinear suite needs exponent tuples");
            RatioReport r = check_bilinear(f, g, *c.tuple, options.tolerance);
            r.trial["functions"] = nlohmann::json::array({df, dg});
            out.push_back(std::move(r));
          }
          return;
        }
        const TrialFunction trial = make_trial(std::move(f), df);
        for (const auto& c : choices) {
          switch (id) {
            case InequalityId::restriction:
              out.push_back(check_restriction(trial, c.p, options.tolerance));
              break;
            case InequalityId::variant:
              out.push_back(check_variant(trial, c.p, c.s, options.tolerance));
              break;
            case InequalityId::same_order:
              out.push_back(check_same_order(trial, c.p, c.s, options.tolerance));
              break;
            case InequalityId::hausdorff_young:
              out.push_back(check_hausdorff_young(trial, c.p, options.tolerance));
              break;
            case InequalityId::bilinear:
              break;
          }
        }
      },
      options.workers);

  std::vector<RatioReport> merged;
  for (auto& v : per_trial) {
    for (auto& r : v) merged.push_back(std::move(r));
  }
  return merged;
}

SuiteSummary summarize(const std::vector<RatioReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.degenerate) {
      ++s.degenerate;
    } else if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
    if (!r.degenerate) s.max_ratio = std::max(s.max_ratio, r.ratio);
  }
  return s;
}

}  // namespace mixnorm
