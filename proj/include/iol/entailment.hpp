#pragma once

#include <span>

#include "iol/context.hpp"
#include "iol/formula.hpp"

namespace iol {

/// Classical consequence: every model of the premises satisfies the goal.
/// Decided as unsatisfiability of premises + negated goal.
bool entails(const FormulaSet& premises, const Formula& goal,
             const Context& ctx = {});

bool is_consistent(const FormulaSet& phi, const Context& ctx = {});

/// Basis of the intersection of the bases' theories. The result carries the
/// single formula "conjunction(b1) | conjunction(b2) | ..."; a one-element
/// sequence passes through unchanged and an empty sequence yields {$false}
/// (the intersection over nothing is the full language).
FormulaSet theory_meet(std::span<const FormulaSet> bases);

/// Basis of the join: the set union of the bases.
FormulaSet theory_join(std::span<const FormulaSet> bases);

/// Mutual entailment of two bases (theory-level equality).
bool bases_equivalent(const FormulaSet& lhs, const FormulaSet& rhs,
                      const Context& ctx = {});

}  // namespace iol
