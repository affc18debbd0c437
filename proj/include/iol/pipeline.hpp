#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace iol {

struct RunConfig {
  std::string input_path;
  std::optional<double> timeout_seconds;  // > 0 when present
  bool print_basis = false;               // basis block even with conjectures
  std::optional<std::string> external_solver;  // DIMACS solver command
};

/// Reads the problem, runs the configured reasoning pipeline and writes SZS
/// results to `out` (diagnostics to `err`). Exit status: 0 for Success or
/// all-Theorem outcomes, 1 when any conjecture is CounterSatisfiable, 2 on
/// input errors, 3 on timeout.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace iol
