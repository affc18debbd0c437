#pragma once

#include <ostream>
#include <vector>

#include "iol/formula.hpp"
#include "iol/tptp.hpp"

namespace iol::szs {

enum class ConjectureStatus { theorem, counter_satisfiable };

/// What the reasoning pipeline established for one problem.
struct Outcome {
  FormulaSet basis;
  bool basis_consistent = true;
  std::vector<ConjectureStatus> conjectures;  // parallel to problem.conjectures
  bool print_basis_with_conjectures = false;
};

/// SZS text. Without conjectures: a Success status line framing a
/// ListOfFormulae block with one basis formula per line ($false alone when
/// the basis is inconsistent). With conjectures: one Theorem or
/// CounterSatisfiable status line per conjecture, in file order.
void write_results(std::ostream& os, const tptp::Problem& problem,
                   const Outcome& outcome);

}  // namespace iol::szs
