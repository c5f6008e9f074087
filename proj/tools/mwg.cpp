#include <iostream>

#include <CLI11.hpp>

#include "mwg/commands.hpp"
#include "mwg/expression.hpp"

using namespace mwg;

int main(int argc, char** argv) {
  CLI::App app{"Graph-algebra and Mauldin-Williams graph toolkit"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::size_t depth = 0;
  double eps = 0.0;
  std::size_t samples = 0;

  app.add_option("--config", opts.config_path, "configuration file (YAML)")->required();
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  auto* tol_opt = app.add_option("--tol", tol, "numerical tolerance");
  auto* depth_opt = app.add_option("--depth", depth, "path depth / normal-form expansion level");
  auto* eps_opt = app.add_option("--eps", eps, "attractor and surjectivity resolution");
  auto* samples_opt = app.add_option("--samples", samples, "randomized sample count");
  app.add_option("--out", opts.out, "output path for point clouds and images");
  app.add_option("--format", opts.format, "image format")->check(CLI::IsMember({"ppm", "svg"}));
  app.add_option("--width", opts.width, "image width in pixels")->check(CLI::PositiveNumber);
  app.add_option("--height", opts.height, "image height in pixels")->check(CLI::PositiveNumber);

  std::string sub;
  std::vector<std::string> args;

  auto* validate_cmd = app.add_subcommand("validate", "check graph and geometry hypotheses");
  auto* algebra_cmd = app.add_subcommand("algebra", "nf <expr> | eq <expr> <expr> | suite");
  algebra_cmd->add_option("sub", sub)->required()->check(CLI::IsMember({"nf", "eq", "suite"}));
  algebra_cmd->add_option("expressions", args);
  auto* verify_cmd = app.add_subcommand("verify", "intertwine | toeplitz | covariance | equivariance | surjectivity");
  verify_cmd->add_option("which", sub)->required()->check(
      CLI::IsMember({"intertwine", "toeplitz", "covariance", "equivariance", "surjectivity"}));
  auto* fractal_cmd = app.add_subcommand("fractal", "attractor | render | dimension | code <path>");
  fractal_cmd->add_option("sub", sub)->required()->check(CLI::IsMember({"attractor", "render", "dimension", "code"}));
  fractal_cmd->add_option("path", args);
  for (auto* cmd : {validate_cmd, algebra_cmd, verify_cmd, fractal_cmd}) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kUsageError;
  }

  if (*seed_opt) opts.seed = seed;
  if (*tol_opt) opts.tol = tol;
  if (*depth_opt) opts.depth = depth;
  if (*eps_opt) opts.eps = eps;
  if (*samples_opt) opts.samples = samples;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const SystemConfig config = load_config(opts.config_path);
    CommandResult result;
    if (command == "validate") {
      result = cmd_validate(config, opts);
    } else if (command == "algebra") {
      result = cmd_algebra(config, sub, args, opts);
    } else if (command == "verify") {
      result = cmd_verify(config, sub, opts);
    } else {
      result = cmd_fractal(config, sub, args, opts);
    }
    std::cout << result.report.dump(2) << '\n';
    return result.exit_code;
  } catch (const ConfigError& err) {
    std::cout << error_report(command, "config", err.what(), err.line()).dump(2) << '\n';
  } catch (const ParseError& err) {
    auto report = error_report(command, "expression", err.what());
    report["error"]["offset"] = err.offset();
    std::cout << report.dump(2) << '\n';
  } catch (const UsageError& err) {
    std::cout << error_report(command, "usage", err.what()).dump(2) << '\n';
  } catch (const ResourceError& err) {
    std::cout << error_report(command, "resource", err.what()).dump(2) << '\n';
  } catch (const GraphError& err) {
    std::cout << error_report(command, "graph", err.what()).dump(2) << '\n';
  }
  return kUsageError;
}
