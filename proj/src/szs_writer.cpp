#include "iol/szs.hpp"

namespace iol::szs {

namespace {

void write_basis_block(std::ostream& os, const tptp::Problem& problem,
                       const Outcome& outcome) {
  os << "% SZS output start ListOfFormulae for " << problem.source_name
     << "\n";
  if (!outcome.basis_consistent) {
    os << "$false\n";
  } else {
    for (const Formula& f : outcome.basis)
      os << to_string(simplified(f), problem.atoms) << "\n";
  }
  os << "% SZS output end ListOfFormulae for " << problem.source_name << "\n";
}

}  // namespace

void write_results(std::ostream& os, const tptp::Problem& problem,
                   const Outcome& outcome) {
  if (problem.conjectures.empty()) {
    os << "% SZS status Success for " << problem.source_name << "\n";
    write_basis_block(os, problem, outcome);
    return;
  }
  for (std::size_t i = 0; i < problem.conjectures.size(); ++i) {
    const char* status = outcome.conjectures[i] == ConjectureStatus::theorem
                             ? "Theorem"
                             : "CounterSatisfiable";
    os << "% SZS status " << status << " for " << problem.source_name << ": "
       << problem.conjectures[i].first << "\n";
  }
  if (outcome.print_basis_with_conjectures)
    write_basis_block(os, problem, outcome);
}

}  // namespace iol::szs
