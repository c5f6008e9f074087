#include "mwg/commands.hpp"

#include <chrono>
#include <fstream>

#include "mwg/expression.hpp"
#include "mwg/render.hpp"
#include "mwg/suite.hpp"

namespace mwg {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

class Run {
 public:
  Run(std::string command, const SystemConfig& config, const GlobalOptions& opts)
      : config_(config), opts_(opts), start_(Clock::now()) {
    report_["command"] = std::move(command);
    report_["inputs"] = {{"config", opts.config_path}};
    report_["seed"] = seed();
    report_["checks"] = json::array();
  }

  std::uint64_t seed() const { return opts_.seed.value_or(config_.options.seed); }
  std::size_t samples(std::size_t fallback) const {
    return opts_.samples.value_or(config_.options.samples.value_or(fallback));
  }
  double tol(double fallback) const { return opts_.tol.value_or(config_.options.tol.value_or(fallback)); }
  AttractorOptions attractor_options() const { return {config_.options.point_cap, AttractorOptions::Seeds::corners}; }

  json& inputs() { return report_["inputs"]; }
  json& results() { return report_["results"]; }

  void check(const std::string& name, bool pass, json detail = json::object()) {
    detail["name"] = name;
    detail["pass"] = pass;
    report_["checks"].push_back(std::move(detail));
  }

  void suite(const SuiteResult& result) {
    for (const auto& t : result.checks) {
      json detail = {{"passed", t.passed}, {"total", t.total}};
      if (!t.first_failure.empty()) detail["first_failure"] = t.first_failure;
      check(t.name, t.ok(), std::move(detail));
    }
  }

  CommandResult finish() {
    bool pass = true;
    for (const auto& c : report_["checks"]) pass = pass && c["pass"].get<bool>();
    report_["pass"] = pass;
    report_["wall_clock_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return {std::move(report_), pass ? kPass : kCheckFailure};
  }

 private:
  const SystemConfig& config_;
  const GlobalOptions& opts_;
  Clock::time_point start_;
  json report_;
};

void require_valid_graph(const SystemConfig& config) {
  ValidationReport report = validate(*config.graph);
  if (!report.ok) throw ConfigError("graph is not row-finite without sources: " + report.violations.front());
}

const MWSystem& require_geometry(const SystemConfig& config) {
  if (!config.geometry) throw ConfigError("this command needs a geometry section");
  require_valid_graph(config);
  ValidationReport report = validate_system(*config.geometry);
  if (!report.ok) throw ConfigError("geometry is invalid: " + report.violations.front());
  return *config.geometry;
}

json point_json(const MWSystem& sys, Point p) {
  if (sys.dimension == 1) return json::array({p.x});
  return json::array({p.x, p.y});
}

json normal_form_json(const NormalForm& nf, const GraphPtr& graph) {
  json classes = json::array();
  for (const auto& [degree, cls] : nf.classes) {
    AlgebraElement part(graph);
    for (const auto& [m, c] : cls.terms) part.add_term(m, c);
    classes.push_back({{"degree", degree}, {"level", cls.level}, {"terms", to_string(part)}});
  }
  return classes;
}

}  // namespace

json error_report(const std::string& command, const std::string& kind, const std::string& message, int line) {
  json report = {{"command", command}, {"pass", false}, {"error", {{"kind", kind}, {"message", message}}}};
  if (line > 0) report["error"]["line"] = line;
  return report;
}

CommandResult cmd_validate(const SystemConfig& config, const GlobalOptions& opts) {
  Run run("validate", config, opts);
  const ValidationReport graph = validate(*config.graph);
  run.check("graph", graph.ok, {{"violations", graph.violations},
                                {"vertices", config.graph->vertex_count()},
                                {"edges", config.graph->edge_count()}});
  if (config.geometry) {
    const ValidationReport geometry = validate_system(*config.geometry);
    run.check("geometry", geometry.ok, {{"violations", geometry.violations}});
  }
  return run.finish();
}

CommandResult cmd_algebra(const SystemConfig& config, const std::string& sub, const std::vector<std::string>& args,
                          const GlobalOptions& opts) {
  Run run("algebra " + sub, config, opts);
  require_valid_graph(config);
  const GraphPtr& graph = config.graph;
  run.inputs()["expressions"] = args;

  if (sub == "nf") {
    if (args.size() != 1) throw UsageError("algebra nf takes exactly one expression");
    const std::size_t level = opts.depth.value_or(0);
    run.inputs()["level"] = level;
    const NormalForm nf = normal_form(parse_expression(graph, args[0]), level);
    run.results()["normal_form"] = to_string(nf, graph);
    run.results()["classes"] = normal_form_json(nf, graph);
  } else if (sub == "eq") {
    if (args.size() != 2) throw UsageError("algebra eq takes exactly two expressions");
    const AlgebraElement x = parse_expression(graph, args[0]);
    const AlgebraElement y = parse_expression(graph, args[1]);
    const bool same = equals(x, y);
    run.results()["equal"] = same;
    run.results()["difference_normal_form"] = to_string(normal_form(x - y), graph);
    run.check("equal", same);
  } else if (sub == "suite") {
    if (!args.empty()) throw UsageError("algebra suite takes no expressions");
    const std::size_t samples = run.samples(500);
    run.inputs()["samples"] = samples;
    Rng rng(run.seed());
    SuiteResult result = algebra_suite(graph, rng, samples);
    result.merge(roundtrip_suite(graph, rng, samples));
    run.suite(result);
  } else {
    throw UsageError("unknown algebra subcommand '" + sub + "' (expected nf, eq or suite)");
  }
  return run.finish();
}

CommandResult cmd_verify(const SystemConfig& config, const std::string& which, const GlobalOptions& opts) {
  Run run("verify " + which, config, opts);
  Rng rng(run.seed());

  if (which == "intertwine" || which == "toeplitz" || which == "covariance") {
    require_valid_graph(config);
    const std::size_t samples = run.samples(200);
    run.inputs()["samples"] = samples;
    if (which == "intertwine") {
      run.suite(cylinder_suite(config.graph, rng, samples));
    } else if (which == "toeplitz") {
      SuiteResult result = toeplitz_suite(config.graph, rng, samples);
      result.merge(generator_coverage(config.graph));
      run.suite(result);
    } else {
      run.suite(covariance_suite(config.graph, rng, samples));
    }
  } else if (which == "equivariance") {
    const MWSystem& sys = require_geometry(config);
    const std::size_t samples = run.samples(1000);
    const std::size_t depth = opts.depth.value_or(30);
    const double tol = opts.tol.value_or(1e-12);
    run.inputs()["samples"] = samples;
    run.inputs()["depth"] = depth;
    run.inputs()["tol"] = tol;
    const EquivarianceReport r = check_equivariance(sys, samples, depth, tol, run.seed());
    run.check("equivariance", r.ok,
              {{"checks", r.checks},
               {"failures", r.failures},
               {"max_discrepancy", r.max_discrepancy},
               {"max_allowed", r.max_allowed}});
  } else if (which == "surjectivity") {
    const MWSystem& sys = require_geometry(config);
    const double eps = opts.eps.value_or(0.01);
    run.inputs()["eps"] = eps;
    const SurjectivityReport r = check_surjectivity(sys, eps, run.attractor_options());
    for (VertexId v : sys.graph->vertices()) {
      run.check("surjective_onto_" + sys.graph->name(v), r.vertex_ok[v.index],
                {{"max_gap", r.max_gap[v.index]}, {"allowed_gap", 2.0 * eps}});
    }
  } else {
    throw UsageError("unknown verify target '" + which +
                     "' (expected intertwine, toeplitz, covariance, equivariance or surjectivity)");
  }
  return run.finish();
}

CommandResult cmd_fractal(const SystemConfig& config, const std::string& sub, const std::vector<std::string>& args,
                          const GlobalOptions& opts) {
  Run run("fractal " + sub, config, opts);
  const MWSystem& sys = require_geometry(config);
  const GraphPtr& graph = sys.graph;

  if (sub == "attractor" || sub == "render") {
    if (!args.empty()) throw UsageError("fractal " + sub + " takes no positional arguments");
    const double eps = opts.eps.value_or(0.01);
    run.inputs()["eps"] = eps;
    const AttractorApprox k = attractor(sys, eps, run.attractor_options());
    run.results()["radius"] = k.radius;
    run.results()["iterations"] = k.iterations;
    json counts = json::object();
    for (VertexId v : graph->vertices()) counts[graph->name(v)] = k.points[v.index].size();
    run.results()["points"] = counts;

    if (sub == "attractor") {
      if (!opts.out.empty()) {
        std::ofstream out(opts.out);
        if (!out) throw UsageError("cannot write '" + opts.out + "'");
        write_point_cloud(out, sys, k);
        run.results()["written"] = opts.out;
      }
    } else {
      if (opts.out.empty()) throw UsageError("fractal render needs --out");
      if (opts.format != "ppm" && opts.format != "svg") throw UsageError("--format must be ppm or svg");
      run.inputs()["format"] = opts.format;
      run.inputs()["width"] = opts.width;
      run.inputs()["height"] = opts.height;
      std::ofstream out(opts.out, std::ios::binary);
      if (!out) throw UsageError("cannot write '" + opts.out + "'");
      try {
        if (opts.format == "ppm") {
          write_ppm(out, render_image(sys, k, opts.width, opts.height));
        } else {
          out << render_svg(sys, k, opts.width, opts.height);
        }
      } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
      }
      run.results()["written"] = opts.out;
    }
  } else if (sub == "dimension") {
    if (!args.empty()) throw UsageError("fractal dimension takes no positional arguments");
    const double tol = run.tol(1e-9);
    run.inputs()["tol"] = tol;
    const double s = dimension(sys, tol);
    run.results()["dimension"] = s;
    const PerronBracket at_root = perron_root(mauldin_matrix(sys, s), tol / 10.0);
    run.results()["spectral_radius_at_root"] = 0.5 * (at_root.lower + at_root.upper);
  } else if (sub == "code") {
    if (args.empty()) throw UsageError("fractal code needs a path literal");
    std::string literal;
    for (const auto& a : args) literal += (literal.empty() ? "" : " ") + a;
    Path alpha = Path::vertex(VertexId{});
    try {
      alpha = parse_path(*graph, literal);
    } catch (const GraphError& err) {
      throw UsageError(err.what());
    }
    const std::size_t depth = opts.depth.value_or(std::max<std::size_t>(20, alpha.length()));
    if (depth < alpha.length()) throw UsageError("--depth is shorter than the path");
    run.inputs()["path"] = literal;
    run.inputs()["depth"] = depth;
    const CodePoint c = code(sys, alpha, depth);
    run.results()["point"] = point_json(sys, c.point);
    run.results()["radius"] = c.radius;
  } else {
    throw UsageError("unknown fractal subcommand '" + sub + "' (expected attractor, render, dimension or code)");
  }
  return run.finish();
}

}  // namespace mwg
