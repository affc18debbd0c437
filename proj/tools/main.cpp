#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "iol/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Reasoner for unconstrained and constrained input/output logics.\n"
      "Reads a TPTP NXF problem file and prints SZS results: the finite\n"
      "basis of all detached obligations, or one status per conjecture."};

  iol::RunConfig config;
  double timeout = 0;
  std::string solver;
  app.add_option("file", config.input_path, "problem file (.p)")->required();
  auto* timeout_opt =
      app.add_option("--timeout", timeout, "wall-clock limit in seconds");
  app.add_flag("--print-basis", config.print_basis,
               "print the basis even when conjectures are present");
  auto* solver_opt = app.add_option(
      "--solver", solver, "external DIMACS CNF solver command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*timeout_opt) config.timeout_seconds = timeout;
  if (*solver_opt) config.external_solver = solver;

  return iol::run(config, std::cout, std::cerr);
}
