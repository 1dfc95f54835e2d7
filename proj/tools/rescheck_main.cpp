#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rescheck/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "rescheck: checks SAT-solver certificates. Unsatisfiability claims are "
      "verified by replaying a resolution proof trace against the original "
      "problem; satisfiability claims by substituting an assignment."};
  app.require_subcommand(1);

  std::string cnf_path, trace_path, assignment_path;
  rescheck::CheckOptions options;

  CLI::App* unsat = app.add_subcommand("unsat", "replay a resolution trace");
  unsat->add_option("cnf", cnf_path, "problem in DIMACS CNF format")->required();
  unsat->add_option("trace", trace_path, "resolution proof trace")->required();
  unsat->add_flag("--check-origins", options.check_origins,
                  "require every trace input clause to match the problem");
  unsat->add_flag("--reorder", options.reorder,
                  "greedily realign chains whose antecedents are out of order");
  unsat->add_flag("--stats", options.stats, "print resolution count and rate");
  unsat->add_flag("--allow-header-mismatch", options.allow_header_mismatch,
                  "downgrade a DIMACS clause-count mismatch to a warning");

  CLI::App* sat = app.add_subcommand("sat", "check a satisfying assignment");
  sat->add_option("cnf", cnf_path, "problem in DIMACS CNF format")->required();
  sat->add_option("assignment", assignment_path, "solver value lines ('v ... 0')")->required();
  sat->add_flag("--allow-header-mismatch", options.allow_header_mismatch,
                "downgrade a DIMACS clause-count mismatch to a warning");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rescheck::kExitFormatError;
  }

  if (app.got_subcommand(unsat))
    return rescheck::run_unsat_check(cnf_path, trace_path, options, std::cout, std::cerr)
        .exit_code;
  return rescheck::run_sat_check(cnf_path, assignment_path, options, std::cout, std::cerr)
      .exit_code;
}
