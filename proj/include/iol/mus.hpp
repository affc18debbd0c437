#pragma once

#include <span>
#include <utility>
#include <vector>

#include "iol/context.hpp"
#include "iol/formula.hpp"
#include "iol/sat.hpp"

namespace iol::mus {

/// One minimal unsatisfiable subset, as the sorted group ids of its members:
/// the selected formulas are jointly unsatisfiable and dropping any single
/// one restores satisfiability.
using MusResult = std::vector<sat::GroupId>;

/// Enumerates every MUS of the grouped formulas. A satisfiable input yields
/// no results. Exploration is a power-set search guided by a map solver:
/// satisfiable seeds grow to maximal satisfiable sets, unsatisfiable seeds
/// shrink (deletion-based, fixed group order) to MUSes; the map solver
/// blocks each explored region. Results are returned in a canonical sorted
/// order, independent of discovery order.
std::vector<MusResult> enumerate_all_muses(
    std::span<const std::pair<sat::GroupId, Formula>> groups,
    const Context& ctx = {});

}  // namespace iol::mus
