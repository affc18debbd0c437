#include "iol/entailment.hpp"

#include <utility>
#include <vector>

#include "iol/sat.hpp"

namespace iol {

bool entails(const FormulaSet& premises, const Formula& goal,
             const Context& ctx) {
  std::vector<std::pair<sat::GroupId, Formula>> sources;
  sources.reserve(premises.size() + 1);
  for (std::size_t i = 0; i < premises.size(); ++i)
    sources.emplace_back(i, premises[i]);
  sources.emplace_back(premises.size(), Formula::negation(goal));
  return !sat::solve(sat::clausify(sources), ctx).satisfiable;
}

bool is_consistent(const FormulaSet& phi, const Context& ctx) {
  return sat::solve(sat::clausify(phi), ctx).satisfiable;
}

FormulaSet theory_meet(std::span<const FormulaSet> bases) {
  if (bases.empty()) return FormulaSet{Formula::bottom()};
  if (bases.size() == 1) return bases[0];
  std::vector<Formula> disjuncts;
  disjuncts.reserve(bases.size());
  for (const FormulaSet& b : bases)
    disjuncts.push_back(Formula::conjunction_of(b.items()));
  FormulaSet result;
  result.insert(Formula::disjunction_of(disjuncts));
  return result;
}

FormulaSet theory_join(std::span<const FormulaSet> bases) {
  FormulaSet result;
  for (const FormulaSet& b : bases) {
    for (const Formula& f : b) result.insert(f);
  }
  return result;
}

bool bases_equivalent(const FormulaSet& lhs, const FormulaSet& rhs,
                      const Context& ctx) {
  return entails(lhs, Formula::conjunction_of(rhs.items()), ctx) &&
         entails(rhs, Formula::conjunction_of(lhs.items()), ctx);
}

}  // namespace iol
