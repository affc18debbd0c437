#include "iol/mus.hpp"

#include <algorithm>
#include <stdexcept>

namespace iol::mus {

namespace {

using Groups = std::span<const std::pair<sat::GroupId, Formula>>;
using Selection = std::vector<bool>;  // indexed by position in `groups`

bool subset_satisfiable(Groups groups, const Selection& sel,
                        const Context& ctx) {
  std::vector<std::pair<sat::GroupId, Formula>> active;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (sel[i]) active.push_back(groups[i]);
  }
  return sat::solve(sat::clausify(active), ctx).satisfiable;
}

Selection shrink_to_mus(Groups groups, Selection sel, const Context& ctx) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!sel[i]) continue;
    sel[i] = false;
    if (subset_satisfiable(groups, sel, ctx)) sel[i] = true;
  }
  return sel;
}

Selection grow_to_mss(Groups groups, Selection sel, const Context& ctx) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (sel[i]) continue;
    sel[i] = true;
    if (!subset_satisfiable(groups, sel, ctx)) sel[i] = false;
  }
  return sel;
}

}  // namespace

std::vector<MusResult> enumerate_all_muses(Groups groups, const Context& ctx) {
  const std::size_t n = groups.size();
  // Map solver over one selector variable per group. A model is an
  // unexplored candidate subset; blocking clauses carve out everything a
  // found MUS (all supersets) or MSS (all subsets) already settles.
  sat::ClauseSet map;
  map.set_num_variables(static_cast<int>(n));

  std::vector<MusResult> muses;
  while (true) {
    ctx.check_deadline();
    sat::SatResult seed_model = sat::solve(map, ctx);
    if (!seed_model.satisfiable) break;
    if (n > 0 && seed_model.model.size() < n + 1)
      throw std::runtime_error(
          "enumerating unsatisfiable subsets needs a model-reporting SAT "
          "solver");
    Selection seed(n, false);
    for (std::size_t i = 0; i < n; ++i)
      seed[i] = seed_model.model[static_cast<int>(i) + 1];

    if (subset_satisfiable(groups, seed, ctx)) {
      Selection mss = grow_to_mss(groups, seed, ctx);
      std::vector<sat::Literal> block_down;
      for (std::size_t i = 0; i < n; ++i) {
        if (!mss[i]) block_down.push_back(sat::pos(static_cast<int>(i) + 1));
      }
      map.add_clause(std::move(block_down));  // empty when the whole set is satisfiable
    } else {
      Selection mus = shrink_to_mus(groups, seed, ctx);
      MusResult ids;
      std::vector<sat::Literal> block_up;
      for (std::size_t i = 0; i < n; ++i) {
        if (mus[i]) {
          ids.push_back(groups[i].first);
          block_up.push_back(sat::neg(static_cast<int>(i) + 1));
        }
      }
      std::sort(ids.begin(), ids.end());
      muses.push_back(std::move(ids));
      map.add_clause(std::move(block_up));
    }
  }
  std::sort(muses.begin(), muses.end());
  return muses;
}

}  // namespace iol::mus
