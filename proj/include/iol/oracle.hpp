#pragma once

#include <cstddef>
#include <vector>

#include "iol/formula.hpp"
#include "iol/norms.hpp"

namespace iol::oracle {

/// Total truth assignment over atoms 0..size-1.
using Valuation = std::vector<bool>;

bool evaluate(const Formula& f, const Valuation& v);

inline constexpr std::size_t default_atom_bound = 12;

/// Decides membership of a candidate formula in the output of the given
/// operation by direct evaluation of the semantic definitions over all
/// valuations of the instance vocabulary. Valuations stand in for complete
/// supersets of the input: atoms outside the instance can affect neither
/// norm triggering nor entailment of instance formulas. Intended for tests
/// and for adjudicating expected values; independent of the SAT path.
/// Throws std::invalid_argument when the vocabulary exceeds `atom_bound`.
bool member(OutputOperator op, const NormSet& norms, const FormulaSet& input,
            const Formula& candidate,
            std::size_t atom_bound = default_atom_bound);

}  // namespace iol::oracle
