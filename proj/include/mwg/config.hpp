#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mwg/graph.hpp"
#include "mwg/ifs.hpp"

namespace mwg {

class ConfigError : public std::runtime_error {
 public:
  /// line is 1-based; 0 when no position is known.
  ConfigError(const std::string& message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

struct ConfigOptions {
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::size_t point_cap = 4'000'000;
  std::optional<std::size_t> samples;
};

/// One experiment: graph, optional Mauldin-Williams geometry, options.
///
///   graph:
///     vertices: [v]
///     edges:
///       - {id: e1, range: v, source: v}
///   geometry:                 # optional
///     dimension: 1
///     spaces:
///       v: {min: [0], max: [1]}
///     maps:
///       e1: {ratio: 1/3, angle_degrees: 0, reflect: false, translation: [0]}
///   options: {seed: 42, tol: 1e-9, point_cap: 4000000, samples: 200}
///
/// Numbers may be written as rationals such as `2/3`.
struct SystemConfig {
  GraphPtr graph;
  std::shared_ptr<const MWSystem> geometry;  // null when absent
  ConfigOptions options;
};

SystemConfig parse_config(std::string_view text);
SystemConfig load_config(const std::string& path);

}  // namespace mwg
