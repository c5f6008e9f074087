#pragma once

#include <memory>
#include <string>

#include "mwg/graph.hpp"
#include "mwg/ifs.hpp"

namespace fixtures {

inline mwg::GraphPtr single_loop() { return mwg::make_graph({"v"}, {{"e", "v", "v"}}); }

inline mwg::GraphPtr cantor_graph() {
  return mwg::make_graph({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}});
}

/// u <- v via e, plus loops so that neither vertex is a source.
inline mwg::GraphPtr two_vertex() {
  return mwg::make_graph({"u", "v"}, {{"e", "u", "v"}, {"f", "u", "u"}, {"g", "v", "u"}, {"h", "v", "v"}});
}

inline std::shared_ptr<const mwg::MWSystem> interval_system(mwg::GraphPtr g,
                                                            std::initializer_list<std::pair<double, double>> maps) {
  auto sys = std::make_shared<mwg::MWSystem>();
  sys->graph = g;
  sys->dimension = 1;
  sys->spaces = {mwg::Box{{0, 0}, {1, 0}}};
  for (auto [ratio, shift] : maps) sys->maps.emplace_back(1, ratio, 0.0, false, mwg::Point{shift, 0});
  return sys;
}

inline std::shared_ptr<const mwg::MWSystem> cantor_system() {
  return interval_system(cantor_graph(), {{1.0 / 3, 0.0}, {1.0 / 3, 2.0 / 3}});
}

inline std::shared_ptr<const mwg::MWSystem> half_system() {
  return interval_system(cantor_graph(), {{0.5, 0.0}, {0.5, 0.5}});
}

inline std::shared_ptr<const mwg::MWSystem> half_loop_system() {
  return interval_system(single_loop(), {{0.5, 0.0}});
}

inline std::string config_path(const std::string& name) { return std::string(MWG_CONFIG_DIR) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(MWG_TEST_DATA_DIR) + "/" + name; }

}  // namespace fixtures
