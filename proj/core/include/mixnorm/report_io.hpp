#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixnorm/counterexample.hpp"
#include "mixnorm/exponents.hpp"
#include "mixnorm/grid.hpp"
#include "mixnorm/inequalities.hpp"
#include "mixnorm/sampling.hpp"

namespace mixnorm {

nlohmann::json grid_to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);
nlohmann::json exponents_to_json(const ExponentTuple& tuple);

nlohmann::json to_json(const RatioReport& report);
// One compact JSON object per line.
void write_json_lines(std::ostream& out, const std::vector<RatioReport>& reports,
                      const nlohmann::json& config);
// inequality_id,exponents,ratio,pass with a leading "# config" comment.
void write_csv_summary(std::ostream& out, const std::vector<RatioReport>& reports,
                       const nlohmann::json& config);

nlohmann::json to_json(const SweepReport& report);
// parameter,observed,log_parameter,log_observed rows between a "# config"
// header comment and a "# " JSON footer with the fit.
void write_sweep_csv(std::ostream& out, const SweepReport& report, const nlohmann::json& config);

// Raw samples as little-endian interleaved (re, im) doubles, row-major with
// the d1 axes first, plus `<stem>.json` carrying the grid, sides and
// descriptor. Returns the paths written.
struct ArrayFiles {
  std::filesystem::path data;
  std::filesystem::path sidecar;
};
ArrayFiles write_array(const std::filesystem::path& stem, const SampledFunction& f,
                       const FunctionDescriptor* descriptor = nullptr);
SampledFunction read_array(const std::filesystem::path& stem);

}  // namespace mixnorm
