#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iol/constrained.hpp"
#include "iol/formula.hpp"
#include "iol/norms.hpp"

namespace iol::tptp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(std::move(message)), line(line), column(column) {}

  int line;
  int column;
};

/// The reasoning set-up from the problem's logic specification.
struct LogicSpec {
  OutputOperator op;
  std::optional<Aggregation> constrained;  // nullopt: unconstrained
  ConstraintSpec constraints;
  PreferenceRelation preference;
};

/// A parsed problem: one logic specification, named norms (role axiom),
/// inputs (role hypothesis) and conjectured outputs, over one atom table.
struct Problem {
  AtomTable atoms;
  LogicSpec spec;
  NormSet norms;
  FormulaSet input;
  std::vector<std::pair<std::string, Formula>> conjectures;
  std::string source_name;
  std::vector<std::string> warnings;
};

/// Parses the propositional NXF dialect: annotated formulas
/// tff(name, role, payload[, source[, annotations]]). with roles logic,
/// axiom (norm payloads {$$norm} @ (body, head)), hypothesis and
/// conjecture; % line and /* */ block comments. Quantifiers, applied terms
/// and include directives are rejected as unsupported.
Problem parse_problem(std::string_view text, std::string source_name);

/// Parses a single classical formula (exposed for round-trip testing).
Formula parse_formula_text(std::string_view text, AtomTable& atoms);

}  // namespace iol::tptp
