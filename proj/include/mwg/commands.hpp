#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwg/config.hpp"

namespace mwg {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flags shared by every subcommand. Unset values fall back to the config's
/// options section, then to per-command defaults.
struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::size_t> depth;
  std::optional<double> eps;
  std::optional<std::size_t> samples;
  std::string out;
  std::string format = "ppm";
  int width = 512;
  int height = 512;
};

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
};

CommandResult cmd_validate(const SystemConfig& config, const GlobalOptions& opts);
/// sub: nf | eq | suite
CommandResult cmd_algebra(const SystemConfig& config, const std::string& sub, const std::vector<std::string>& args,
                          const GlobalOptions& opts);
/// which: intertwine | toeplitz | covariance | equivariance | surjectivity
CommandResult cmd_verify(const SystemConfig& config, const std::string& which, const GlobalOptions& opts);
/// sub: attractor | render | dimension | code
CommandResult cmd_fractal(const SystemConfig& config, const std::string& sub, const std::vector<std::string>& args,
                          const GlobalOptions& opts);

/// Report for a run that failed before a command could execute.
nlohmann::json error_report(const std::string& command, const std::string& kind, const std::string& message,
                            int line = 0);

}  // namespace mwg
