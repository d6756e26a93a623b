// Acceptance checks: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "mixnorm/counterexample.hpp"
#include "mixnorm/exponents.hpp"
#include "mixnorm/inequalities.hpp"
#include "mixnorm/mixed_norms.hpp"
#include "mixnorm/sampling.hpp"
#include "mixnorm/transform.hpp"

using namespace mixnorm;

namespace {

Exponent E(const char* s) { return Exponent::parse(s); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-check failures; the first few are reported.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) {
      if (failures_.size() < 5) failures_.push_back(what);
      ++failed_;
    }
  }
  Outcome done(const std::string& summary) const {
    Outcome o{failed_ == 0, summary};
    if (failed_ > 0) {
      o.detail += " | " + std::to_string(failed_) + "/" + std::to_string(count_) + " failed:";
      for (const auto& f : failures_) o.detail += " [" + f + "]";
    }
    return o;
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double l2(const SampledFunction& f) { return plain_norm(f, 2); }

const GridSpec kGrid({1, 1}, 256, 16.0);

Outcome constants() {
  Checker c;
  c.expect(beckner_constant(2) == 1.0, "C_2 != 1");
  c.expect(beckner_constant(1) == 1.0, "C_1 != 1");
  const double oracle = std::pow(4.0 / 3.0, 3.0 / 8.0) * std::pow(4.0, -1.0 / 8.0);
  const double got = beckner_constant(E("4/3"));
  c.expect(std::abs(got - oracle) <= 1e-12, fmt("C_4/3 %.17g vs %.17g", got, oracle));
  std::mt19937_64 rng(20150825);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    double r = 1.0 + u(rng);
    if (r <= 1.0) r = 1.5;
    const double v = beckner_constant(Exponent::from_double(r));
    worst = std::max(worst, v);
    c.expect(v < 1.0, fmt("C_r >= 1 at r=%.17g", r));
  }
  return c.done(fmt("C_4/3 = %.15f (|err| %.1e), max C_r over 50 samples %.6f", got,
                    std::abs(got - oracle), worst));
}

Outcome transform_fidelity() {
  Checker c;
  const auto fhat = fourier(gaussian_product(kGrid, {1.0, 1.0}));
  // exp(-pi |xi|^2) sampled on the frequency grid.
  const double selfdual_freq =
      max_abs_difference(fhat, sample_transform(GaussianSum::product({1.0, 1.0}), kGrid));
  c.expect(selfdual_freq <= 1e-6, fmt("self-duality error %.3e", selfdual_freq));
  double plancherel = 0.0, contraction = -1e300;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto f = random_ensemble(kGrid, 8, derive_seed(20150825, k));
    const auto F = fourier(f);
    const double rel = std::abs(l2(F) / l2(f) - 1.0);
    plancherel = std::max(plancherel, rel);
    c.expect(rel <= 1e-6, fmt("Plancherel rel error %.3e", rel));
    const double excess = plain_norm(F, E("inf")) - plain_norm(f, 1);
    contraction = std::max(contraction, excess);
    c.expect(excess <= 1e-8, fmt("L1->Linf excess %.3e", excess));
  }
  return c.done(fmt("self-duality %.2e, Plancherel %.2e, max(||F^||_inf - ||F||_1) %.3g",
                    selfdual_freq, plancherel, contraction));
}

Outcome two_path() {
  Checker c;
  double worst = 0.0;
  const auto check = [&](const SampledFunction& f, const std::string& name) {
    const double e = max_abs_difference(slice_second_zero(fourier(f)), fourier(marginal_second(f)));
    worst = std::max(worst, e);
    c.expect(e <= 1e-8, name + fmt(" %.3e", e));
  };
  check(gaussian_product(kGrid, {1.0, 2.0}), "gaussian_product");
  for (std::uint64_t k = 0; k < 10; ++k) {
    check(random_ensemble(kGrid, 8, derive_seed(1, k)), "random_ensemble");
  }
  check(random_ensemble(GridSpec({2, 1}, 96, 12.0), 5, 4), "random_ensemble 2+1");
  const auto f = GaussianSum::product({1.0});
  for (double t : {1.0, 0.25, 1.0 / 32.0}) {
    const auto grid = blowup_grid(f, f, t, E("4/3"));
    check(shear_product(dilate_first_axis(f, t, E("4/3")), f, grid), fmt("dilation_shear t=%g", t));
  }
  for (double eps : {1.0, 0.25, 1.0 / 16.0}) {
    const auto fn = near_delta_function(f, eps);
    check(sample(fn, fit_grid({1, 1}, fn.support(), 64)), fmt("near_delta eps=%g", eps));
  }
  return c.done(fmt("max |slice - transform of marginal| %.2e over 17 functions", worst));
}

Outcome sharpness() {
  Checker c;
  const auto trial = make_trial(gaussian_product(kGrid, {1.0, 1.0}));
  const auto hy_grid = GridSpec({2, 0}, 256, 16.0);
  const auto hy_trial = make_trial(gaussian_product(hy_grid, {1.0, 1.0}));
  const std::vector<Exponent> exps{E("4/3"), E("3/2"), E("2")};
  double worst = 0.0;
  const auto take = [&](const RatioReport& r, const std::string& name) {
    const double e = std::abs(r.ratio - 1.0);
    worst = std::max(worst, e);
    c.expect(e <= 1e-3, name + fmt(" ratio %.9f", r.ratio));
  };
  for (const auto& p : exps) {
    take(check_hausdorff_young(trial, p, 1e-3), "hausdorff-young p=" + p.to_string());
    take(check_hausdorff_young(hy_trial, p, 1e-3), "hausdorff-young d2=0 p=" + p.to_string());
    take(check_restriction(trial, p, 1e-3), "restriction p=" + p.to_string());
    for (const auto& s : exps) {
      const std::string ps = " p=" + p.to_string() + " s=" + s.to_string();
      take(check_variant(trial, p, s, 1e-3), "variant" + ps);
      if (p <= s) take(check_same_order(trial, p, s, 1e-3), "same-order" + ps);
    }
  }
  return c.done(fmt("max |ratio - 1| %.2e", worst));
}

Outcome suites() {
  Checker c;
  SuiteOptions options;
  options.grid = kGrid;
  options.trials = 100;
  options.seed = 20150825;
  std::string summary;
  for (auto id : {InequalityId::restriction, InequalityId::bilinear, InequalityId::variant,
                  InequalityId::same_order, InequalityId::hausdorff_young}) {
    const auto choices = default_choices(id, options.seed);
    const auto reports = random_suite(id, choices, options);
    const auto s = summarize(reports);
    c.expect(s.failed == 0 && s.passed > 0, std::string(to_string(id)) + " failures");
    c.expect(s.max_ratio <= 1.0 + 1e-2, std::string(to_string(id)) + fmt(" max %.6f", s.max_ratio));
    c.expect(reports.size() == 100 * choices.size(), std::string(to_string(id)) + " count");
    summary += std::string(summary.empty() ? "" : ", ") + to_string(id) + " " +
               std::to_string(s.passed) + "/" + std::to_string(s.total) +
               fmt(" max %.4f", s.max_ratio);
    if (s.degenerate) summary += " (" + std::to_string(s.degenerate) + " degenerate)";
  }
  return c.done(summary);
}

Outcome minkowski() {
  Checker c;
  const SampledFunction id(GridSpec({1, 1}, 2, 2.0), {1.0, 0.0, 0.0, 1.0}, Side::space,
                           Side::space);
  const auto m = minkowski_compare(id, 1, 2);
  c.expect(std::abs(m.larger_outer - std::sqrt(2.0)) <= 1e-12, fmt("larger %.17g", m.larger_outer));
  c.expect(std::abs(m.smaller_outer - 2.0) <= 1e-12, fmt("smaller %.17g", m.smaller_outer));
  c.expect(m.holds, "identity verdict");

  std::mt19937_64 rng(20150825);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<Exponent> exps{E("1"), E("4/3"), E("3/2"), E("2"), E("3"), E("4"), E("inf")};
  double worst = -1e300;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 * (1 + static_cast<int>(rng() % 8));
    const GridSpec g({1, 1}, n, 0.5 + 4.0 * u(rng));
    std::vector<Complex> v(g.total_size());
    const double scale = std::pow(10.0, 6.0 * u(rng) - 3.0);
    for (auto& x : v) x = u(rng) < 0.2 ? 0.0 : scale * u(rng);
    Exponent a = exps[rng() % exps.size()];
    Exponent b = exps[rng() % exps.size()];
    if (b < a) std::swap(a, b);
    const auto r = minkowski_compare(SampledFunction(g, v, Side::space, Side::space), a, b);
    const double excess = (r.larger_outer - r.smaller_outer) / std::max(r.smaller_outer, 1e-300);
    worst = std::max(worst, r.larger_outer - r.smaller_outer);
    c.expect(r.larger_outer <= r.smaller_outer + 1e-10,
             fmt("excess %.3e", excess));
  }
  return c.done(fmt("identity (%.12f, %.1f), max excess over 1000 arrays %.3g", m.larger_outer,
                    m.smaller_outer, worst));
}

SweepReport g_blowup;  // reused by the oracle criterion

Outcome blowup() {
  Checker c;
  const auto ts = geometric_sequence(1.0, 0.5, 6);
  g_blowup = blowup_sweep(2, E("4/3"), ts);
  const auto& r = g_blowup;
  c.expect(std::abs(r.fitted_slope + 0.25) <= 0.05, fmt("slope %.4f", r.fitted_slope));
  for (std::size_t i = 1; i < r.observed.size(); ++i)
    c.expect(r.observed[i] > r.observed[i - 1], fmt("not increasing at t=%g", ts[i]));
  const double spread = relative_spread(r.rhs);
  c.expect(spread <= 1e-3, fmt("rhs spread %.3e", spread));
  const auto flat = blowup_sweep(2, 2, ts);
  c.expect(std::abs(flat.fitted_slope) <= 0.02, fmt("(2,2) slope %.4f", flat.fitted_slope));
  return c.done(fmt("(2,4/3) slope %.4f, ratio %.4f -> %.4f", r.fitted_slope, r.observed.front(),
                    r.observed.back()) +
                fmt(", rhs spread %.1e, (2,2) slope %.1e", spread, flat.fitted_slope));
}

Outcome oracle() {
  Checker c;
  double worst = 0.0;
  for (std::size_t i = 0; i < g_blowup.oracle_error.size(); ++i) {
    const double e = g_blowup.oracle_error[i];
    worst = std::max(worst, e);
    c.expect(e <= 1e-6, fmt("t=%g error %.3e", g_blowup.parameters[i], e));
  }
  c.expect(g_blowup.oracle_error.size() == 6, "missing sweep points");
  return c.done(fmt("max |DFT - closed form| %.2e over %g points", worst,
                    static_cast<double>(g_blowup.oracle_error.size())));
}

Outcome delta() {
  Checker c;
  const auto eps = geometric_sequence(1.0, 0.5, 5);  // 1 .. 1/16
  std::string summary;
  for (const char* ptxt : {"2", "3/2"}) {
    const Exponent p = E(ptxt);
    const auto r = delta_divergence_demo(p, eps);
    c.expect(divergence_milestone(r), std::string("p=") + ptxt + " milestone");
    DeltaOptions control;
    control.shear = false;
    const auto ctl = delta_divergence_demo(p, eps, control);
    const double cap = beckner_power(p, 1) * (1 + 1e-2);
    double top = 0.0;
    for (double v : ctl.observed) top = std::max(top, v);
    c.expect(top <= cap, std::string("p=") + ptxt + fmt(" control %.6f > %.6f", top, cap));
    summary += std::string(summary.empty() ? "" : ", ") + "p=" + ptxt +
               fmt(" ratio %.3f -> %.3f, control max %.4f", r.observed.front(), r.observed.back(),
                   top);
  }
  return c.done(summary);
}

Outcome necessity() {
  Checker c;
  const auto lambdas = geometric_sequence(0.5, std::pow(4.0, 0.25), 5);
  std::string summary;
  const std::vector<ExponentTuple> ok{{4, 2, 4, 2, 2}, {E("inf"), 2, 2, 2, 2},
                                      {E("8"), E("4/3"), E("8/3"), 4, 2}};
  double worst = 0.0;
  for (const auto& x : ok) {
    c.expect(static_cast<bool>(admissible(x)), x.to_string() + " not admissible");
    for (auto g : {DilationGroup::first, DilationGroup::second}) {
      const auto r = necessity_sweep(x, lambdas, g);
      worst = std::max(worst, std::abs(r.fitted_slope));
      c.expect(std::abs(r.fitted_slope) <= 0.02, x.to_string() + fmt(" slope %.4f", r.fitted_slope));
    }
  }
  summary = fmt("admissible max |slope| %.1e", worst);
  struct Violation {
    ExponentTuple x;
    DilationGroup group;
    const char* reason;
  };
  const std::vector<Violation> bad{{{4, 1, 4, 2, 2}, DilationGroup::second, "s-t-relation"},
                                   {{4, 2, 4, 4, 2}, DilationGroup::second, "s-t-relation"},
                                   {{4, 2, 4, 2, 4}, DilationGroup::first, "r-relation"},
                                   {{4, 2, 2, 2, 2}, DilationGroup::first, "r-relation"}};
  for (const auto& v : bad) {
    c.expect(admissible(v.x).reason == v.reason, v.x.to_string() + " reason " + admissible(v.x).reason);
    const auto r = necessity_sweep(v.x, lambdas, v.group);
    const double want = predicted_necessity_slope(v.x, v.group, {1, 1});
    c.expect(want != 0.0 && std::signbit(r.fitted_slope) == std::signbit(want) &&
                 std::abs(r.fitted_slope - want) <= 0.05,
             v.x.to_string() + fmt(" slope %.4f vs %.4f", r.fitted_slope, want));
    summary += ", " + v.x.to_string() + fmt(" %.3f (predicted %.3f)", r.fitted_slope, want);
  }
  return c.done(summary);
}

Outcome determinism() {
  Checker c;
  const std::vector<std::vector<std::string>> runs{
      {"verify", "bilinear", "--trials", "5", "--grid-n", "128"},
      {"verify", "variant", "--trials", "5", "--grid-n", "128", "--seed", "3", "--format", "csv"},
      {"sweep", "blowup", "--points", "4", "--format", "json"},
      {"sweep", "necessity"}};
  for (const auto& args : runs) {
    std::ostringstream o1, o2, e1, e2;
    const int a = cli::run(args, o1, e1);
    const int b = cli::run(args, o2, e2);
    c.expect(a == b && a == cli::kExitPass, args[0] + " " + args[1] + " exit codes");
    c.expect(!o1.str().empty() && o1.str() == o2.str(), args[0] + " " + args[1] + " payload differs");
  }
  return c.done("4 command lines run twice with identical payloads");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"constants", constants},
      {"transform fidelity", transform_fidelity},
      {"two-path identity", two_path},
      {"sharpness", sharpness},
      {"inequality suites", suites},
      {"minkowski orientation", minkowski},
      {"blowup reproduction", blowup},
      {"oracle agreement", oracle},
      {"delta divergence", delta},
      {"necessity sweep", necessity},
      {"determinism", determinism}};
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << index << " " << name << ": " << o.detail
              << fmt(" (%.1fs)", secs) << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
