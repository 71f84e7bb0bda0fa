#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "decay/commands.hpp"

namespace {

void add_solver_flags(CLI::App* cmd, decay::CommandOptions& opt) {
  cmd->add_option("--map", opt.map_path, "Map description file (YAML)")->required();
  cmd->add_option("--radius", opt.radius, "1-norm of the decay point")->capture_default_str();
  cmd->add_option("--epsilon", opt.epsilon, "Required margin (Ts*)_i + eps <= s*_i")->capture_default_str();
  cmd->add_option("--max-iterations", opt.max_iterations, "Cap on map evaluations")->capture_default_str();
}

void add_tie_break(CLI::App* cmd, decay::TieBreak& tie) {
  const std::map<std::string, decay::TieBreak> names{{"max", decay::TieBreak::Max}, {"min", decay::TieBreak::Min}};
  cmd->add_option("--tie-break", tie, "Label choice among qualifying indices")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case))
      ->default_str("max");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decay points of monotone maps on the nonnegative orthant"};
  app.require_subcommand(1);

  decay::CommandOptions opt;

  auto* find = app.add_subcommand("find", "Search S_r for s* with Ts* << s*");
  add_solver_flags(find, opt);
  add_tie_break(find, opt.tie_break);

  auto* verify = app.add_subcommand("verify", "Find s* and certify [0, s*] by iterating from s*");
  add_solver_flags(verify, opt);
  add_tie_break(verify, opt.tie_break);
  verify->add_option("--stop-tol", opt.stop_tol, "Sup-norm below which the trajectory counts as converged")
      ->capture_default_str();
  verify->add_option("--k-max", opt.k_max, "Maximum trajectory length")->capture_default_str();

  decay::CommandOptions sweep_opt;
  sweep_opt.radius = 10.0;
  sweep_opt.max_iterations = 100000;
  auto* sweep = app.add_subcommand("sweep", "Iteration counts over dimensions and margins, as CSV");
  sweep->add_option("family", sweep_opt.family, "chain or linear-random")->required();
  sweep->add_option("--dims", sweep_opt.dims, "Dimensions, e.g. 2,3,4")->delimiter(',')->required();
  sweep->add_option("--epsilons", sweep_opt.epsilons, "Margins, e.g. 0.1,0.01")->delimiter(',')->required();
  sweep->add_option("--radius", sweep_opt.radius, "1-norm of the decay point")->capture_default_str();
  sweep->add_option("--max-iterations", sweep_opt.max_iterations, "Cap on map evaluations per solve")
      ->capture_default_str();
  sweep->add_option("--instances", sweep_opt.instances, "Random matrices per (n, epsilon)")->capture_default_str();
  sweep->add_option("--seed", sweep_opt.seed, "Seed of the first instance")->capture_default_str();
  sweep->add_option("--out", sweep_opt.out_path, "CSV file (default: stdout)");
  add_tie_break(sweep, sweep_opt.tie_break);

  auto* spectral = app.add_subcommand("spectral", "Spectral radius and Perron direction of a linear map");
  spectral->add_option("--map", opt.map_path, "Map description file (YAML)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? decay::kExitSuccess : decay::kExitUsage;
  }

  if (*find) return decay::cmd_find(opt, std::cout, std::cerr);
  if (*verify) return decay::cmd_verify(opt, std::cout, std::cerr);
  if (*sweep) return decay::cmd_sweep(sweep_opt, std::cout, std::cerr);
  return decay::cmd_spectral(opt, std::cout, std::cerr);
}
