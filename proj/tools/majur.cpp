// Command-line front end: scenario ingestion, bound computation, Lorenz/CSV
// emission, guessing-game simulation and the built-in reference checks.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 evaluation budget exceeded, 4 I/O failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "majur/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"majorization uncertainty-relation bounds for finite-dimensional measurements"};
  app.require_subcommand(1);

  majur::CliOptions opts;
  std::uint64_t forced_budget = 0;
  app.add_option("--jobs", opts.jobs, "worker threads for subset enumeration")
      ->envname("MAJUR_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_option("--force-budget", forced_budget,
                 "raise the eigenvalue-call budget and lift the outcome-space size gates");

  auto* bounds = app.add_subcommand("bounds", "compute the bound vectors of a scenario");
  majur::BoundsCommand bounds_cmd;
  bounds->add_option("--scenario", bounds_cmd.scenario_path, "scenario JSON file")->required();
  bounds->add_option("--json", bounds_cmd.json_path, "write a full-precision JSON report");
  bounds->add_option("--emit-lorenz", bounds_cmd.lorenz_path, "write Lorenz curves as CSV");
  bounds->add_option("--dump-scenario", bounds_cmd.dump_scenario_path,
                     "re-emit the parsed scenario as normalized JSON");

  auto* verify = app.add_subcommand("verify-paper", "check the built-in reference values");
  double tol_override = 0.0;
  std::string verify_json;
  verify->add_option("--tol", tol_override,
                     "override every per-check tolerance (rounding-limited checks fail below "
                     "their stated tolerance)");
  verify->add_option("--json", verify_json, "write the check table as JSON");

  auto* game = app.add_subcommand("simulate-game", "Monte Carlo guessing game for a scenario");
  std::string game_scenario;
  std::uint64_t trials = 1'000'000, seed = 42;
  int top_k = 1;
  game->add_option("--scenario", game_scenario, "scenario JSON file (kind DP or DS)")->required();
  game->add_option("--trials", trials, "rounds to simulate")->check(CLI::PositiveNumber);
  game->add_option("--seed", seed, "PRNG seed (std::mt19937_64)");
  game->add_option("--k", top_k, "number of outcomes Bob may guess")->check(CLI::PositiveNumber);

  auto* lorenz = app.add_subcommand("lorenz", "emit Lorenz curves for all states and bounds");
  std::string lorenz_scenario, lorenz_output;
  lorenz->add_option("--scenario", lorenz_scenario, "scenario JSON file")->required();
  lorenz->add_option("output", lorenz_output, "output CSV path")->required();

  auto* entropy = app.add_subcommand("entropy", "Shannon/U/V uncertainty summary of a scenario");
  std::string entropy_scenario;
  entropy->add_option("--scenario", entropy_scenario, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (forced_budget > 0) {
    opts.budget.max_evaluations = forced_budget;
    opts.budget.forced = true;
  }

  try {
    if (bounds->parsed()) return majur::cmd_bounds(opts, bounds_cmd, std::cout);
    if (verify->parsed()) return majur::cmd_verify_paper(opts, tol_override, std::cout, verify_json);
    if (game->parsed()) {
      return majur::cmd_simulate_game(opts, game_scenario, trials, seed, top_k, std::cout);
    }
    if (lorenz->parsed()) return majur::cmd_lorenz(opts, lorenz_scenario, lorenz_output, std::cout);
    if (entropy->parsed()) return majur::cmd_entropy(opts, entropy_scenario, std::cout);
  } catch (const majur::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
