#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iol/context.hpp"
#include "iol/formula.hpp"

namespace iol::sat {

/// Identifies the source a clause (or soft formula) was derived from, e.g.
/// one input formula or one negated norm body. Assignment is caller-defined.
using GroupId = std::size_t;

struct Literal {
  int var;        // >= 1
  bool positive;

  Literal negated() const { return {var, !positive}; }
  bool operator==(const Literal& o) const = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

struct Clause {
  std::vector<Literal> literals;
  std::optional<GroupId> group;
};

/// Sequence of clauses over variables 1..num_variables. Tautologous clauses
/// (both polarities of one variable) are dropped on insertion.
class ClauseSet {
 public:
  void set_num_variables(int n);
  int num_variables() const { return num_variables_; }
  int fresh_variable();

  /// Returns false if the clause was tautologous and dropped.
  bool add_clause(std::vector<Literal> literals,
                  std::optional<GroupId> group = std::nullopt);

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }

 private:
  std::vector<Clause> clauses_;
  int num_variables_ = 0;
};

struct SatResult {
  bool satisfiable = false;
  /// model[v] for v in 1..num_variables; only meaningful when satisfiable.
  /// Index 0 is unused.
  std::vector<bool> model;
};

/// Structural (definitional) CNF transformation. Atom id a maps to variable
/// a + 1; definition variables are allocated above every atom variable, so a
/// model restricted to atom variables is a model of the source formulas.
/// Clauses of the i-th source are tagged with that source's group id.
ClauseSet clausify(std::span<const std::pair<GroupId, Formula>> sources);

/// Convenience: group id of each formula is its position in the set.
ClauseSet clausify(const FormulaSet& sources);

/// Complete decision procedure. Uses ctx.solver when set, otherwise the
/// built-in kernel (unit-propagating backtracking search over watched
/// literals, deterministic branching). Honors ctx.deadline.
SatResult solve(const ClauseSet& clauses, const Context& ctx = {});

/// DIMACS CNF text: "p cnf <vars> <clauses>" header, zero-terminated lines.
std::string to_dimacs(const ClauseSet& clauses);

class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual SatResult solve(const ClauseSet& clauses) = 0;
};

/// Runs `<command> <cnf-file>` on a DIMACS dump of the query and reads the
/// verdict from the "s SATISFIABLE"/"s UNSATISFIABLE" line, a bare
/// SATISFIABLE/UNSATISFIABLE line, or exit codes 10/20. "v" lines are parsed
/// into a model when present; without them a SAT answer carries no model.
class ExternalDimacsSolver : public SolverBackend {
 public:
  explicit ExternalDimacsSolver(std::string command)
      : command_(std::move(command)) {}
  SatResult solve(const ClauseSet& clauses) override;

 private:
  std::string command_;
};

}  // namespace iol::sat
