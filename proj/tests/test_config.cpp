#include <doctest.h>

#include "fixtures.hpp"
#include "mwg/config.hpp"

using namespace mwg;

namespace {

int error_line(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& err) {
    return err.line();
  }
  FAIL("no config error");
  return -1;
}

}  // namespace

TEST_CASE("every shipped config loads and validates") {
  for (const char* name :
       {"cantor.yaml", "half_interval.yaml", "single_loop.yaml", "sierpinski.yaml", "two_vertex.yaml", "quadrants.yaml"}) {
    CAPTURE(name);
    const SystemConfig c = load_config(fixtures::config_path(name));
    CHECK(validate(*c.graph).ok);
    REQUIRE(c.geometry);
    const ValidationReport r = validate_system(*c.geometry);
    CHECK_MESSAGE(r.ok, (r.violations.empty() ? "" : r.violations.front()));
  }
}

TEST_CASE("rationals and options are parsed") {
  const SystemConfig c = load_config(fixtures::config_path("cantor.yaml"));
  CHECK(c.options.seed == 42);
  const Similarity& e2 = c.geometry->map(c.graph->edge("e2"));
  CHECK(e2.ratio() == 1.0 / 3);
  CHECK(e2.translation().x == 2.0 / 3);

  const SystemConfig d = parse_config(R"(
graph:
  vertices: [v]
  edges: [{id: e, range: v, source: v}]
options: {seed: 7, tol: 1e-6, point_cap: 1000, samples: 12}
)");
  CHECK(d.options.seed == 7);
  CHECK(*d.options.tol == 1e-6);
  CHECK(d.options.point_cap == 1000);
  CHECK(*d.options.samples == 12);
  CHECK_FALSE(d.geometry);
}

TEST_CASE("malformed files report a line number") {
  try {
    load_config(fixtures::data_path("malformed.yaml"));
    FAIL("malformed config accepted");
  } catch (const ConfigError& err) {
    CHECK(err.line() >= 4);
    CHECK(err.line() <= 5);
  }
}

TEST_CASE("schema errors point at the offending node") {
  CHECK(error_line("graph:\n  vertices: [v]\n  edges:\n    - {id: e, range: v, source: w}\n") == 4);
  CHECK(error_line("graph:\n  vertices: [v]\n  edges:\n    - {id: e, range: v}\n") == 4);
  CHECK(error_line("graph:\n  vertices: [v]\n  edges: [{id: e, range: v, source: v}]\n"
                   "geometry:\n  dimension: 3\n  spaces: {}\n  maps: {}\n") == 5);
  CHECK(error_line("graph:\n  vertices: [v]\n  edges: [{id: e, range: v, source: v}]\n"
                   "geometry:\n  dimension: 1\n  spaces:\n    v: {min: [0], max: [1]}\n"
                   "  maps:\n    e: {ratio: abc, translation: [0]}\n") == 9);
  CHECK_THROWS_AS(parse_config("- just\n- a list\n"), ConfigError);
  CHECK_THROWS_AS(load_config(fixtures::data_path("does_not_exist.yaml")), ConfigError);
}

TEST_CASE("graphs with sources still load so that validate can report them") {
  const SystemConfig c = load_config(fixtures::data_path("source_vertex.yaml"));
  const ValidationReport r = validate(*c.graph);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.front() == "v is a source");
}

TEST_CASE("containment violations survive loading and are reported") {
  const SystemConfig c = load_config(fixtures::data_path("bad_map.yaml"));
  const ValidationReport r = validate_system(*c.geometry);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.front().find("e") != std::string::npos);
}
