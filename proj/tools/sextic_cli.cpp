// Command-line front end for the sextic-oscillator phase-space toolkit.
//
// Exit codes: 0 success, 1 numerical failure, 2 invalid configuration.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sextic/errors.hpp"

namespace {

void add_common(CLI::App* cmd, sextic::cli::Common& common) {
  cmd->add_option("--threads", common.threads,
                  "worker count (0: SEXTIC_THREADS env or hardware)");
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", common.output, "output file or prefix (default stdout)");
}

void add_grid(CLI::App* cmd, sextic::cli::GridOptions& grid) {
  cmd->add_option("--nx", grid.nx, "position node count (>= 41)");
  cmd->add_option("--np", grid.np, "momentum node count (>= 41)");
  cmd->add_option("--x-min", grid.x_min);
  cmd->add_option("--x-max", grid.x_max);
  cmd->add_option("--p-min", grid.p_min);
  cmd->add_option("--p-max", grid.p_max);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variational and phase-space analysis of the sextic double-well oscillator"};
  app.require_subcommand(1);
  app.set_config("--config", "", "plain key=value configuration file; flags override");
  app.allow_config_extras(CLI::config_extras_mode::ignore_all);

  sextic::cli::SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "variational energy and coefficients");
  solve->add_option("--lambda", solve_opt.lambda, "coupling")->required();
  solve->add_option("--n", solve_opt.n, "state index (0 or 1)")->required();
  solve->add_option("--degree", solve_opt.degree, "polynomial prefactor degree (even)");
  add_common(solve, solve_opt.common);

  sextic::cli::PhasespaceOptions ps_opt;
  auto* ps = app.add_subcommand("phasespace", "Wigner / |W| / Husimi grids");
  ps->add_option("--lambda", ps_opt.lambda)->required();
  ps->add_option("--n", ps_opt.n)->required();
  ps->add_option("--degree", ps_opt.degree);
  ps->add_option("--kind", ps_opt.kinds, "wigner, abswigner, husimi (repeatable)");
  add_grid(ps, ps_opt.grid);
  add_common(ps, ps_opt.common);

  sextic::cli::MarginalsOptions marg_opt;
  auto* marg = app.add_subcommand("marginals", "position/momentum marginals of a grid");
  marg->add_option("--lambda", marg_opt.lambda)->required();
  marg->add_option("--n", marg_opt.n)->required();
  marg->add_option("--degree", marg_opt.degree);
  marg->add_option("--kind", marg_opt.kinds, "wigner, abswigner, husimi (repeatable)");
  marg->add_option("--axis", marg_opt.axis)->check(CLI::IsMember({"x", "p", "both"}));
  add_grid(marg, marg_opt.grid);
  add_common(marg, marg_opt.common);

  sextic::cli::SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("entropy", "entropy sweep over a coupling range");
  sweep->add_option("--lambda-start", sweep_opt.lambda_start)->required();
  sweep->add_option("--lambda-stop", sweep_opt.lambda_stop);
  sweep->add_option("--steps", sweep_opt.steps, "sample count (1: single coupling)");
  sweep->add_option("--n", sweep_opt.n)->required();
  sweep->add_option("--degree", sweep_opt.degree);
  sweep->add_flag("--strict", sweep_opt.strict, "nonzero exit on hierarchy violations");
  add_grid(sweep, sweep_opt.grid);
  add_common(sweep, sweep_opt.common);

  sextic::cli::CrjOptionsCli crj_opt;
  auto* crj = app.add_subcommand("crj", "cumulative residual Jeffreys divergences");
  crj->add_option("--lambda-start", crj_opt.lambda_start)->required();
  crj->add_option("--lambda-stop", crj_opt.lambda_stop);
  crj->add_option("--steps", crj_opt.steps);
  crj->add_option("--n", crj_opt.n)->required();
  crj->add_option("--degree", crj_opt.degree);
  add_common(crj, crj_opt.common);

  sextic::cli::CriticalOptions crit_opt;
  auto* crit = app.add_subcommand("critical", "coupling where E_n crosses the barrier top");
  crit->add_option("--n", crit_opt.n)->required();
  add_common(crit, crit_opt.common);

  sextic::cli::QesExactOptions qes_opt;
  auto* qes = app.add_subcommand("qes-exact", "algebraic sector at integer coupling");
  qes->add_option("--N", qes_opt.n_max, "sector size (lambda = N)")->required();
  add_common(qes, qes_opt.common);

  sextic::cli::ReproduceOptions rep_opt;
  auto* rep = app.add_subcommand("reproduce", "run the full reference-table report");
  add_common(rep, rep_opt.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve) return sextic::cli::run_solve(solve_opt);
    if (*ps) return sextic::cli::run_phasespace(ps_opt);
    if (*marg) return sextic::cli::run_marginals(marg_opt);
    if (*sweep) return sextic::cli::run_entropy(sweep_opt);
    if (*crj) return sextic::cli::run_crj(crj_opt);
    if (*crit) return sextic::cli::run_critical(crit_opt);
    if (*qes) return sextic::cli::run_qes_exact(qes_opt);
    if (*rep) return sextic::cli::run_reproduce(rep_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sextic::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
