#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "mixnorm/counterexample.hpp"
#include "mixnorm/errors.hpp"
#include "mixnorm/exponents.hpp"
#include "mixnorm/inequalities.hpp"
#include "mixnorm/report_io.hpp"

namespace mixnorm::cli {
namespace {

constexpr double kBlowupSlopeTolerance = 0.05;
constexpr double kAdmissibleSlopeTolerance = 0.02;
constexpr double kViolationSlopeTolerance = 0.05;

// Output sink: the --out file when given, `fallback` otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw PreconditionError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::optional<Exponent> parse_opt(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return Exponent::parse(*text);
}

GridSpec grid_of(const RunConfig& c) { return GridSpec({c.d1, c.d2}, c.grid_n, c.grid_l); }

std::vector<ExponentChoice> verify_choices(InequalityId id, const RunConfig& c) {
  const auto p = parse_opt(c.p);
  const auto s = parse_opt(c.s);
  const auto exps = standard_exponents();
  const auto or_all = [&](const std::optional<Exponent>& e) {
    return e ? std::vector<Exponent>{*e} : exps;
  };
  std::vector<ExponentChoice> out;
  switch (id) {
    case InequalityId::restriction:
    case InequalityId::hausdorff_young:
      for (const auto& pp : or_all(p)) out.push_back({pp, Exponent(2), std::nullopt});
      break;
    case InequalityId::variant:
      for (const auto& pp : or_all(p))
        for (const auto& ss : or_all(s)) out.push_back({pp, ss, std::nullopt});
      break;
    case InequalityId::same_order:
      if (p && s && *p > *s) {
        throw PreconditionError("same-order bound needs p <= s (p > s is the unbounded regime; "
                                "see `sweep blowup`)");
      }
      for (const auto& pp : or_all(p))
        for (const auto& ss : or_all(s))
          if (pp <= ss) out.push_back({pp, ss, std::nullopt});
      break;
    case InequalityId::bilinear: {
      const bool any = c.p || c.s || c.q || c.t || c.r;
      if (!any) return default_choices(id, c.seed);
      if (!(c.p && c.s && c.q && c.t && c.r)) {
        throw PreconditionError("bilinear needs all of --p --s --q --t --r (or none)");
      }
      const ExponentTuple x{*p, *s, *parse_opt(c.q), *parse_opt(c.t), *parse_opt(c.r)};
      if (const Admissibility a = admissible(x); !a) {
        throw PreconditionError("inadmissible exponents " + x.to_string() + ": " + a.reason);
      }
      out.push_back({x.p, x.s, x});
      break;
    }
  }
  // Range gates before any sampling.
  for (const auto& ch : out) {
    if (id == InequalityId::bilinear) continue;
    if (ch.p < Exponent(1) || ch.p > Exponent(2) || ch.s > Exponent(2)) {
      throw PreconditionError("exponents must lie in [1,2] for " + std::string(to_string(id)));
    }
  }
  return out;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {{"command", command},
                      {"target", target},
                      {"grid_n", grid_n},
                      {"grid_l", grid_l},
                      {"d1", d1},
                      {"d2", d2},
                      {"seed", seed},
                      {"trials", trials},
                      {"format", format},
                      {"points", points}};
  const auto put = [&](const char* key, const std::optional<std::string>& v) {
    j[key] = v ? nlohmann::json(Exponent::parse(*v).to_string()) : nlohmann::json(nullptr);
  };
  put("p", p);
  put("s", s);
  put("q", q);
  put("t", t);
  put("r", r);
  return j;
}

int cmd_constants(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<Exponent> rs;
  for (const auto& text : c.r_list) {
    const Exponent r = Exponent::parse(text);
    if (r < Exponent(1) || r > Exponent(2)) {
      err << "error: r = " << r.to_string() << " is outside [1,2]\n";
      return kExitUsage;
    }
    rs.push_back(r);
  }
  if (rs.empty()) rs = standard_exponents();
  for (int d : c.dims) {
    if (d < 0) {
      err << "error: dimensions must be non-negative\n";
      return kExitUsage;
    }
  }
  out << std::left << std::setw(8) << "r" << std::setw(8) << "r'" << std::setw(22) << "C_r";
  for (int d : c.dims) out << std::setw(22) << ("C_r^" + std::to_string(d));
  out << '\n' << std::setprecision(15);
  for (const auto& r : rs) {
    out << std::setw(8) << r.to_string() << std::setw(8) << conjugate(r).to_string()
        << std::setw(22) << beckner_constant(r);
    for (int d : c.dims) out << std::setw(22) << beckner_power(r, d);
    out << '\n';
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const InequalityId id = inequality_from_string(c.target);
  const auto choices = verify_choices(id, c);
  SuiteOptions options;
  options.grid = grid_of(c);
  options.trials = c.trials;
  options.seed = c.seed;
  if (c.trials < 1) throw PreconditionError("--trials must be at least 1");

  const auto reports = random_suite(id, choices, options);
  const nlohmann::json config = c.to_json();
  Sink sink(c.out, out);
  if (c.format == "csv") {
    write_csv_summary(sink.get(), reports, config);
  } else {
    write_json_lines(sink.get(), reports, config);
  }
  const SuiteSummary s = summarize(reports);
  err << "verify " << to_string(id) << ": " << s.total << " trials, " << s.passed << " passed, "
      << s.failed << " failed, " << s.degenerate << " degenerate, max ratio "
      << std::setprecision(10) << s.max_ratio << '\n';
  return s.ok() ? kExitPass : kExitFailure;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<SweepReport> reports;
  std::vector<double> tolerances;
  bool ok = true;
  if (c.target == "blowup") {
    const Exponent p = parse_opt(c.p).value_or(Exponent(2));
    const Exponent s = parse_opt(c.s).value_or(Exponent::parse("4/3"));
    if (!(s < p) || s < Exponent(1) || p > Exponent(2)) {
      err << "error: blowup needs 1 <= s < p <= 2 (s >= p is bounded)\n";
      return kExitUsage;
    }
    const int n = c.points > 0 ? c.points : 6;
    reports.push_back(blowup_sweep(p, s, geometric_sequence(1.0, 0.5, n)));
    ok = slope_within(reports.back(), kBlowupSlopeTolerance);
  } else if (c.target == "delta") {
    const Exponent p = parse_opt(c.p).value_or(Exponent(2));
    const int n = c.points > 0 ? c.points : 5;
    reports.push_back(delta_divergence_demo(p, geometric_sequence(1.0, 0.5, n)));
    ok = divergence_milestone(reports.back());
  } else if (c.target == "necessity") {
    const ExponentTuple x{parse_opt(c.p).value_or(Exponent(4)), parse_opt(c.s).value_or(Exponent(2)),
                          parse_opt(c.q).value_or(Exponent(4)), parse_opt(c.t).value_or(Exponent(2)),
                          parse_opt(c.r).value_or(Exponent(2))};
    const int n = c.points > 0 ? c.points : 5;
    const auto lambdas = geometric_sequence(0.5, std::pow(4.0, 1.0 / (n - 1)), n);
    NecessityOptions options;
    options.dims = {c.d1, c.d2};
    const double tol = admissible(x) ? kAdmissibleSlopeTolerance : kViolationSlopeTolerance;
    for (auto group : {DilationGroup::first, DilationGroup::second}) {
      reports.push_back(necessity_sweep(x, lambdas, group, options));
      ok = ok && slope_within(reports.back(), tol);
    }
  } else {
    err << "error: unknown sweep kind '" << c.target << "' (blowup, delta, necessity)\n";
    return kExitUsage;
  }

  const nlohmann::json config = c.to_json();
  Sink sink(c.out, out);
  if (c.format == "json") {
    nlohmann::json doc = {{"config", config}, {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    sink.get() << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) write_sweep_csv(sink.get(), r, config);
  }
  for (const auto& r : reports) {
    err << "sweep " << r.kind << ": fitted slope " << std::setprecision(6) << r.fitted_slope
        << ", expected " << r.expected_slope << '\n';
  }
  return ok ? kExitPass : kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of mixed-norm Fourier inequalities"};
  app.require_subcommand(1);
  RunConfig c;

  auto* constants = app.add_subcommand("constants", "Sharp Hausdorff-Young constants C_r");
  constants->add_option("--r", c.r_list, "Exponent(s) in [1,2]; fractions or decimals");
  constants->add_option("--dim", c.dims, "Dimension(s) n for C_r^n");

  auto* verify = app.add_subcommand("verify", "Random-trial suite for one inequality");
  verify->add_option("inequality", c.target,
                     "restriction | bilinear | variant | same-order | hausdorff-young")
      ->required();
  auto* sweep = app.add_subcommand("sweep", "Counterexample and necessity sweeps");
  sweep->add_option("kind", c.target, "blowup | delta | necessity")->required();

  for (auto* sub : {verify, sweep}) {
    sub->add_option("--p", c.p, "Exponent p (fraction or inf)");
    sub->add_option("--s", c.s, "Exponent s");
    sub->add_option("--q", c.q, "Exponent q");
    sub->add_option("--t", c.t, "Exponent t");
    sub->add_option("--r", c.r, "Exponent r");
    sub->add_option("--d1", c.d1, "Dimension of the first factor")->capture_default_str();
    sub->add_option("--d2", c.d2, "Dimension of the second factor")->capture_default_str();
    sub->add_option("--grid-n", c.grid_n, "Points per axis (even)")->capture_default_str();
    sub->add_option("--grid-l", c.grid_l, "Extent per axis")->capture_default_str();
    sub->add_option("--trials", c.trials, "Random trials per selection")->capture_default_str();
    sub->add_option("--seed", c.seed, "Base seed")->capture_default_str();
    sub->add_option("--format", c.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out, "Output path (default: stdout)");
  }
  sweep->add_option("--points", c.points, "Number of sweep points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (constants->parsed()) {
      c.command = "constants";
      return cmd_constants(c, out, err);
    }
    if (verify->parsed()) {
      c.command = "verify";
      return cmd_verify(c, out, err);
    }
    c.command = "sweep";
    return cmd_sweep(c, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mixnorm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mixnorm::cli
