#include "reach/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using reach::Rational;
using reach::cli::CommandResult;

struct Options
{
  std::string spec_path;
  std::size_t depth = reach::cli::kDefaultDepth;
  std::string target = "0";
  std::size_t index = 0;
  std::optional<std::size_t> t;
  std::string method = "all";
  bool matrix = false;
  bool augmented = false;
  std::optional<std::size_t> mu;
  std::size_t window = reach::kDefaultCaveatWindow;
  std::optional<std::size_t> random_specs;
  std::uint64_t seed = 1;
};

void add_spec(CLI::App &cmd, Options &opts, bool required = true)
{
  auto *opt = cmd.add_option("--spec", opts.spec_path, "recurrence spec file (JSON)");
  if (required)
    opt->required();
}

void add_depth(CLI::App &cmd, Options &opts)
{
  cmd.add_option("-N", opts.depth, "depth N (default 64)");
}

void add_target(CLI::App &cmd, Options &opts)
{
  cmd.add_option("-r", opts.target, "target rational, p or p/q (default 0)");
}

CommandResult dispatch(const CLI::App &app, const Options &opts)
{
  const auto target = [&] { return Rational::parse(opts.target, "-r"); };
  const auto spec = [&] { return reach::load_spec(opts.spec_path); };

  if (app.got_subcommand("eval"))
    return reach::cli::cmd_eval(spec(), opts.depth);
  if (app.got_subcommand("reach"))
    return reach::cli::cmd_reach(spec(), target(), opts.depth,
                                 reach::cli::parse_method(opts.method), opts.window);
  if (app.got_subcommand("omega"))
    return reach::cli::cmd_omega(spec(), opts.index, target(),
                                 {opts.matrix, opts.augmented, opts.mu});
  if (app.got_subcommand("certify"))
    return reach::cli::cmd_certify(spec(), target(), opts.depth, opts.t);
  if (opts.random_specs)
    return reach::cli::cmd_verify_random(*opts.random_specs, opts.seed, opts.depth);
  if (opts.spec_path.empty())
    throw reach::InvalidArgument("verify: --spec or --random-specs is required");
  return reach::cli::cmd_verify(spec(), opts.depth, target(), opts.seed);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Bounded reachability of a target rational by a linear recurrence"};
  app.require_subcommand(1);
  Options opts;

  auto *eval = app.add_subcommand("eval", "evaluate E_1..E_N");
  add_spec(*eval, opts);
  add_depth(*eval, opts);

  auto *reach_cmd = app.add_subcommand("reach", "search for the first index with E_k = r");
  add_spec(*reach_cmd, opts);
  add_depth(*reach_cmd, opts);
  add_target(*reach_cmd, opts);
  reach_cmd->add_option("--method", opts.method, "oracle, product, cramer or all (default all)");
  reach_cmd->add_option("--window", opts.window, "trailing window for the convergence caveat");

  auto *omega = app.add_subcommand("omega", "evaluate the determinant Omega_i");
  add_spec(*omega, opts);
  add_target(*omega, opts);
  omega->add_option("-i", opts.index, "term index i")->required();
  omega->add_flag("--matrix", opts.matrix, "include the matrix");
  omega->add_flag("--augmented", opts.augmented, "also evaluate the r-shifted determinant");
  omega->add_option("--mu", opts.mu, "determinant of the block-diagonal product matrix of depth N");

  auto *certify = app.add_subcommand("certify", "linear-system certificates per index");
  add_spec(*certify, opts);
  add_depth(*certify, opts);
  add_target(*certify, opts);
  certify->add_option("-t", opts.t, "index for the witness and coefficient collapse");

  auto *verify = app.add_subcommand("verify", "run every identity check");
  add_spec(*verify, opts, false);
  add_depth(*verify, opts);
  add_target(*verify, opts);
  verify->add_option("--random-specs", opts.random_specs, "verify K random specs instead");
  verify->add_option("--seed", opts.seed, "seed for random specs and sample points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return reach::cli::kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    CommandResult result = dispatch(app, opts);
    const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
    result.report["timing_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
    std::cout << result.report.dump(2) << '\n';
    return result.exit_code;
  } catch (const reach::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return reach::cli::kInputError;
  } catch (const reach::InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return reach::cli::kInputError;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return reach::cli::kInconsistent;
  }
}
