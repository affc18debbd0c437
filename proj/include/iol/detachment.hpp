#pragma once

#include <vector>

#include "iol/context.hpp"
#include "iol/entailment.hpp"
#include "iol/formula.hpp"
#include "iol/norms.hpp"

namespace iol {

/// Norms whose body is entailed by the input, decided one satisfiability
/// call per norm (input + negated body unsatisfiable).
NormSet directly_triggered_norms(const FormulaSet& input, const NormSet& norms,
                                 const Context& ctx = {});

/// Basis of simple-minded output: the heads of the directly triggered norms.
FormulaSet basis1(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx = {});

/// Basis of reusable output by fixed-point iteration: newly triggered norms
/// feed their heads back into the input until nothing new triggers. When
/// `iterations` is given it receives the number of loop passes executed.
FormulaSet basis3(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx = {}, std::size_t* iterations = nullptr);

/// All norm sets weakly triggered by the input, recovered from the minimal
/// unsatisfiable subsets of input + negated bodies. Syntactically equal
/// bodies share one group; each MUS maps to every norm carrying one of its
/// bodies. An inconsistent input short-circuits to all singletons. Results
/// are ordered by ascending norm positions.
std::vector<NormSet> weakly_triggered_sets(const FormulaSet& input,
                                           const NormSet& norms,
                                           const Context& ctx = {});

/// Basis of basic output: for every weakly triggered set and every choice of
/// one norm per distinct body in it, the disjunction of the chosen heads.
/// Selections with several norms per body are entailed by these and omitted.
FormulaSet basis2(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx = {});

/// Material counterparts of the norms: (negated body | head) per norm.
FormulaSet materialize(const NormSet& norms);

/// Basis of basic reusable output via materialization: basis2 over the input
/// extended with the materialized norms.
FormulaSet basis4(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx = {});

/// Bases of the throughput variants: out1/out3 add the input to their plain
/// basis; out2 and out4 with throughput coincide and their basis is the
/// input plus the materialization.
FormulaSet basis_throughput(OutputOperator op, const NormSet& norms,
                            const FormulaSet& input, const Context& ctx = {});

/// Dispatch over the seven distinct output operations.
FormulaSet basis_for(OutputOperator op, const NormSet& norms,
                     const FormulaSet& input, const Context& ctx = {});

}  // namespace iol
