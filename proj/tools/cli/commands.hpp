#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mixnorm::cli {

// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20150825;

// Everything that determines a run. Echoed into every output artifact.
struct RunConfig {
  std::string command;  // constants | verify | sweep
  std::string target;   // inequality id or sweep kind
  int grid_n = 256;
  double grid_l = 16.0;
  int d1 = 1;
  int d2 = 1;
  std::uint64_t seed = kDefaultSeed;
  int trials = 100;
  std::optional<std::string> p, s, q, t, r;
  std::vector<std::string> r_list;  // constants --r (repeatable)
  std::vector<int> dims{1};         // constants --dim (repeatable)
  int points = 0;                   // sweep points (0: kind default)
  std::string format;               // json | csv ("" = command default)
  std::string out;                  // "" = stdout

  nlohmann::json to_json() const;
};

int cmd_constants(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixnorm::cli
