#include "mixnorm/report_io.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <ostream>

#include "mixnorm/errors.hpp"

namespace mixnorm {
namespace {

static_assert(std::endian::native == std::endian::little,
              "array export assumes a little-endian host");

std::filesystem::path with_suffix(const std::filesystem::path& stem, const char* suffix) {
  return std::filesystem::path(stem.string() + suffix);
}

std::string exponent_label(const RatioReport& r) {
  const auto& e = r.trial.value("exponents", nlohmann::json::object());
  std::string out;
  for (const char* key : {"p", "s", "q", "t", "r"}) {
    if (!e.contains(key)) continue;
    if (!out.empty()) out += ' ';
    out += std::string(key) + "=" + e.at(key).get<std::string>();
  }
  return out;
}

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json grid_to_json(const GridSpec& grid) {
  return {{"d1", grid.dims().d1},
          {"d2", grid.dims().d2},
          {"points_per_axis", grid.points()},
          {"extent_per_axis", grid.extent()},
          {"spacing", grid.spacing()}};
}

GridSpec grid_from_json(const nlohmann::json& j) {
  return GridSpec({j.at("d1").get<int>(), j.at("d2").get<int>()},
                  j.at("points_per_axis").get<int>(), j.at("extent_per_axis").get<double>());
}

nlohmann::json exponents_to_json(const ExponentTuple& x) {
  return {{"p", x.p.to_string()},
          {"s", x.s.to_string()},
          {"q", x.q.to_string()},
          {"t", x.t.to_string()},
          {"r", x.r.to_string()}};
}

nlohmann::json to_json(const RatioReport& r) {
  return {{"inequality_id", to_string(r.id)},
          {"lhs", r.lhs},
          {"bound", r.bound},
          {"ratio", r.ratio},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"degenerate", r.degenerate},
          {"trial", r.trial}};
}

void write_json_lines(std::ostream& out, const std::vector<RatioReport>& reports,
                      const nlohmann::json& config) {
  for (const auto& r : reports) {
    nlohmann::json line = to_json(r);
    line["config"] = config;
    out << line.dump() << '\n';
  }
}

void write_csv_summary(std::ostream& out, const std::vector<RatioReport>& reports,
                       const nlohmann::json& config) {
  out << "# config " << config.dump() << '\n';
  out << "inequality_id,exponents,ratio,pass\n";
  out.precision(17);
  for (const auto& r : reports) {
    out << to_string(r.id) << ',' << exponent_label(r) << ',' << r.ratio << ','
        << (r.degenerate ? "degenerate" : (r.pass ? "true" : "false")) << '\n';
  }
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json grids = nlohmann::json::array();
  for (const auto& g : r.grids) grids.push_back(grid_to_json(g));
  return {{"kind", r.kind},
          {"parameters", r.parameters},
          {"observed", r.observed},
          {"rhs", r.rhs},
          {"oracle_error", r.oracle_error},
          {"grids", grids},
          {"fitted_slope", finite_or_null(r.fitted_slope)},
          {"expected_slope", r.expected_slope},
          {"residual", finite_or_null(r.residual)},
          {"config", r.config}};
}

void write_sweep_csv(std::ostream& out, const SweepReport& r, const nlohmann::json& config) {
  out << "# config " << config.dump() << '\n';
  out << "parameter,observed,log_parameter,log_observed\n";
  out.precision(17);
  for (std::size_t i = 0; i < r.parameters.size(); ++i) {
    out << r.parameters[i] << ',' << r.observed[i] << ',' << std::log(r.parameters[i]) << ','
        << std::log(r.observed[i]) << '\n';
  }
  const nlohmann::json footer = {{"kind", r.kind},
                                 {"fitted_slope", finite_or_null(r.fitted_slope)},
                                 {"expected_slope", r.expected_slope},
                                 {"residual", finite_or_null(r.residual)}};
  out << "# " << footer.dump() << '\n';
}

ArrayFiles write_array(const std::filesystem::path& stem, const SampledFunction& f,
                       const FunctionDescriptor* descriptor) {
  ArrayFiles files{with_suffix(stem, ".bin"), with_suffix(stem, ".json")};
  {
    std::ofstream data(files.data, std::ios::binary);
    if (!data) throw std::runtime_error("cannot write " + files.data.string());
    const auto values = f.values();
    data.write(reinterpret_cast<const char*>(values.data()),
               static_cast<std::streamsize>(values.size_bytes()));
  }
  nlohmann::json side = {{"grid", grid_to_json(f.grid())},
                         {"first_side", to_string(f.side(AxisGroup::first))},
                         {"second_side", to_string(f.side(AxisGroup::second))},
                         {"layout", "row-major complex128 (re, im), d1 axes then d2 axes"},
                         {"data", files.data.filename().string()}};
  if (descriptor != nullptr) side["descriptor"] = *descriptor;
  std::ofstream meta(files.sidecar);
  if (!meta) throw std::runtime_error("cannot write " + files.sidecar.string());
  meta << side.dump(2) << '\n';
  return files;
}

SampledFunction read_array(const std::filesystem::path& stem) {
  std::ifstream meta(with_suffix(stem, ".json"));
  if (!meta) throw PreconditionError("missing sidecar for " + stem.string());
  const nlohmann::json side = nlohmann::json::parse(meta);
  const GridSpec grid = grid_from_json(side.at("grid"));
  const auto parse_side = [](const std::string& s) {
    return s == "space" ? Side::space : Side::frequency;
  };
  std::vector<Complex> values(grid.total_size());
  std::ifstream data(with_suffix(stem, ".bin"), std::ios::binary);
  data.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(Complex)));
  if (!data || data.peek() != std::char_traits<char>::eof()) {
    throw PreconditionError("array file size does not match its grid");
  }
  return SampledFunction(grid, std::move(values), parse_side(side.at("first_side")),
                         parse_side(side.at("second_side")));
}

}  // namespace mixnorm
