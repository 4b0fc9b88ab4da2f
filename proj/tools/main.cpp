#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using fko::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"FKO unsatisfiability witnesses for 3CNF and a TC0-Frege proof checker"};
  app.require_subcommand(1);

  auto pipeline_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--c", cfg.c, "grid exponent: eigen data on the 1/n^(2c) grid")->capture_default_str();
    sub->add_option("--d", cfg.d, "clause reuse bound of the collection")->capture_default_str();
    sub->add_option("--k-max", cfg.k_max, "longest tuple to search (even)")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "collection search rounds")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "search seed")->capture_default_str();
  };
  auto io_flags = [&cfg](CLI::App* sub) {
    sub->add_option("-o,--out", cfg.output, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json | csv");
  };

  auto* gen = app.add_subcommand("gen", "random 3CNF in DIMACS");
  gen->add_option("--n", cfg.n, "variables (>= 3)")->required();
  gen->add_option("--m", cfg.m, "clauses (default ceil(n^1.4))");
  gen->add_option("--seed", cfg.seed)->capture_default_str();
  gen->add_option("-o,--out", cfg.output, "output path (default stdout)");

  auto* witness = app.add_subcommand("witness", "build a witness for a CNF");
  witness->add_option("cnf", cfg.input)->required();
  pipeline_flags(witness);
  io_flags(witness);

  auto* verify = app.add_subcommand("verify", "check a witness against a CNF");
  verify->add_option("cnf", cfg.input)->required();
  verify->add_option("witness", cfg.witness)->required();
  io_flags(verify);

  auto* refute = app.add_subcommand("refute", "build and verify; brute force when n <= oracle cap");
  refute->add_option("cnf", cfg.input)->required();
  pipeline_flags(refute);
  refute->add_option("--oracle-cap", cfg.oracle_cap)->capture_default_str();
  io_flags(refute);

  auto* oracle = app.add_subcommand("oracle", "exhaustive satisfiability check");
  oracle->add_option("cnf", cfg.input)->required();
  oracle->add_option("--oracle-cap", cfg.oracle_cap)->capture_default_str();
  io_flags(oracle);

  auto* checkproof = app.add_subcommand("checkproof", "check a TC0-Frege proof file");
  checkproof->add_option("proof", cfg.input)->required();
  checkproof->add_option("--goal", cfg.goal, "formula the proof must end in (--> goal)");
  io_flags(checkproof);

  auto* sweep = app.add_subcommand("sweep", "witness search over random instances, one CSV row each");
  sweep->add_option("--ns", cfg.ns, "variable counts")->delimiter(',');
  sweep->add_option("--n", cfg.n, "single variable count");
  sweep->add_option("--m", cfg.m, "fixed clause count");
  sweep->add_option("--m-factor", cfg.m_factor, "m = ceil(factor * n^1.4)")->capture_default_str();
  sweep->add_option("--seeds", cfg.seeds, "instances per n, seeds --seed, --seed+1, ...")->capture_default_str();
  pipeline_flags(sweep);
  io_flags(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return fko::cli::kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return fko::cli::run(cfg, std::cout, std::cerr);
}
