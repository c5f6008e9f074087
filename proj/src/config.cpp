#include "mwg/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace mwg {

ConfigError::ConfigError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) { throw ConfigError(message, line_of(node)); }

YAML::Node require(const YAML::Node& parent, const char* key) {
  YAML::Node child = parent[key];
  if (!child) fail(parent, std::string("missing key '") + key + "'");
  return child;
}

std::string as_string(const YAML::Node& node) {
  if (!node.IsScalar()) fail(node, "expected a scalar");
  return node.Scalar();
}

// Accepts plain numbers and rationals p/q.
double as_number(const YAML::Node& node) {
  const std::string text = as_string(node);
  const auto slash = text.find('/');
  auto parse = [&](std::string_view part) {
    try {
      std::size_t used = 0;
      double value = std::stod(std::string(part), &used);
      if (used != part.size()) fail(node, "malformed number '" + text + "'");
      return value;
    } catch (const std::logic_error&) {
      fail(node, "malformed number '" + text + "'");
    }
  };
  if (slash == std::string::npos) return parse(text);
  const double den = parse(std::string_view(text).substr(slash + 1));
  if (den == 0.0) fail(node, "zero denominator in '" + text + "'");
  return parse(std::string_view(text).substr(0, slash)) / den;
}

bool as_bool(const YAML::Node& node) {
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    fail(node, "expected true or false");
  }
}

std::uint64_t as_unsigned(const YAML::Node& node) {
  const std::string text = as_string(node);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) fail(node, "expected a nonnegative integer");
  return value;
}

Point as_point(const YAML::Node& node, int dimension) {
  if (!node.IsSequence() || static_cast<int>(node.size()) != dimension) {
    fail(node, "expected a list of " + std::to_string(dimension) + " coordinate(s)");
  }
  Point p{as_number(node[0]), 0.0};
  if (dimension == 2) p.y = as_number(node[1]);
  return p;
}

GraphPtr parse_graph(const YAML::Node& node) {
  const YAML::Node vertices = require(node, "vertices");
  const YAML::Node edges = require(node, "edges");
  if (!vertices.IsSequence()) fail(vertices, "'vertices' must be a list");
  if (!edges.IsSequence()) fail(edges, "'edges' must be a list");
  std::vector<std::string> vs;
  for (const auto& v : vertices) vs.push_back(as_string(v));
  std::vector<EdgeSpec> es;
  const std::set<std::string> known(vs.begin(), vs.end());
  const auto endpoint = [&](const YAML::Node& e, const char* key) {
    const YAML::Node n = require(e, key);
    std::string id = as_string(n);
    if (!known.count(id)) fail(n, std::string(key) + " '" + id + "' is not a declared vertex");
    return id;
  };
  for (const auto& e : edges) {
    if (!e.IsMap()) fail(e, "each edge must be a map {id, range, source}");
    std::string id = as_string(require(e, "id"));
    std::string range = endpoint(e, "range");
    es.push_back({std::move(id), std::move(range), endpoint(e, "source")});
  }
  try {
    return make_graph(std::move(vs), std::move(es));
  } catch (const GraphError& err) {
    fail(node, err.what());
  }
}

std::shared_ptr<const MWSystem> parse_geometry(const YAML::Node& node, const GraphPtr& graph) {
  auto sys = std::make_shared<MWSystem>();
  sys->graph = graph;
  const YAML::Node dim = require(node, "dimension");
  sys->dimension = static_cast<int>(as_unsigned(dim));
  if (sys->dimension != 1 && sys->dimension != 2) fail(dim, "dimension must be 1 or 2");

  const YAML::Node spaces = require(node, "spaces");
  const YAML::Node maps = require(node, "maps");
  if (!spaces.IsMap()) fail(spaces, "'spaces' must map vertex ids to boxes");
  if (!maps.IsMap()) fail(maps, "'maps' must map edge ids to similarities");

  sys->spaces.resize(graph->vertex_count());
  std::vector<bool> have_space(graph->vertex_count(), false);
  for (const auto& kv : spaces) {
    auto v = graph->find_vertex(as_string(kv.first));
    if (!v) fail(kv.first, "unknown vertex '" + kv.first.Scalar() + "' in spaces");
    sys->spaces[v->index] = {as_point(require(kv.second, "min"), sys->dimension),
                             as_point(require(kv.second, "max"), sys->dimension)};
    have_space[v->index] = true;
  }
  for (VertexId v : graph->vertices()) {
    if (!have_space[v.index]) fail(spaces, "no space given for vertex '" + graph->name(v) + "'");
  }

  sys->maps.resize(graph->edge_count());
  std::vector<bool> have_map(graph->edge_count(), false);
  for (const auto& kv : maps) {
    auto e = graph->find_edge(as_string(kv.first));
    if (!e) fail(kv.first, "unknown edge '" + kv.first.Scalar() + "' in maps");
    const YAML::Node m = kv.second;
    const double ratio = as_number(require(m, "ratio"));
    const double angle = m["angle_degrees"] ? as_number(m["angle_degrees"]) : 0.0;
    const bool reflect = m["reflect"] ? as_bool(m["reflect"]) : false;
    const Point translation = m["translation"] ? as_point(m["translation"], sys->dimension) : Point{};
    try {
      sys->maps[e->index] = Similarity(sys->dimension, ratio, angle, reflect, translation);
    } catch (const std::invalid_argument& err) {
      fail(m, err.what());
    }
    have_map[e->index] = true;
  }
  for (EdgeId e : graph->edges()) {
    if (!have_map[e.index]) fail(maps, "no map given for edge '" + graph->name(e) + "'");
  }
  return sys;
}

}  // namespace

SystemConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& err) {
    throw ConfigError(err.msg, err.mark.line >= 0 ? err.mark.line + 1 : 0);
  }
  if (!root.IsMap()) throw ConfigError("configuration must be a map with a 'graph' section", line_of(root));

  SystemConfig config;
  config.graph = parse_graph(require(root, "graph"));
  if (const YAML::Node geometry = root["geometry"]) config.geometry = parse_geometry(geometry, config.graph);
  if (const YAML::Node options = root["options"]) {
    if (options["seed"]) config.options.seed = as_unsigned(options["seed"]);
    if (options["tol"]) config.options.tol = as_number(options["tol"]);
    if (options["point_cap"]) config.options.point_cap = as_unsigned(options["point_cap"]);
    if (options["samples"]) config.options.samples = as_unsigned(options["samples"]);
  }
  return config;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace mwg
