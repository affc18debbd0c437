#include "iol/detachment.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "iol/mus.hpp"
#include "iol/sat.hpp"

namespace iol {

NormSet directly_triggered_norms(const FormulaSet& input, const NormSet& norms,
                                 const Context& ctx) {
  NormSet triggered;
  for (const Norm& n : norms) {
    if (entails(input, n.body, ctx)) triggered.add(n);
  }
  return triggered;
}

FormulaSet basis1(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx) {
  FormulaSet heads;
  for (const Norm& n : directly_triggered_norms(input, norms, ctx))
    heads.insert(n.head);
  return heads;
}

FormulaSet basis3(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx, std::size_t* iterations) {
  FormulaSet augmented = input;
  std::vector<bool> triggered(norms.size(), false);
  std::vector<std::size_t> fresh;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (entails(augmented, norms[i].body, ctx)) {
      triggered[i] = true;
      fresh.push_back(i);
    }
  }
  std::size_t passes = 0;
  while (!fresh.empty()) {
    ++passes;
    for (std::size_t i : fresh) augmented.insert(norms[i].head);
    fresh.clear();
    for (std::size_t i = 0; i < norms.size(); ++i) {
      if (triggered[i]) continue;
      if (entails(augmented, norms[i].body, ctx)) {
        triggered[i] = true;
        fresh.push_back(i);
      }
    }
  }
  if (iterations) *iterations = passes;
  FormulaSet heads;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (triggered[i]) heads.insert(norms[i].head);
  }
  return heads;
}

namespace {

struct BodyGroups {
  std::vector<Formula> bodies;                    // distinct, first-seen order
  std::vector<std::vector<std::size_t>> carriers; // norm positions per body
};

BodyGroups group_by_body(const NormSet& norms) {
  BodyGroups g;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    auto it = std::find(g.bodies.begin(), g.bodies.end(), norms[i].body);
    if (it == g.bodies.end()) {
      g.bodies.push_back(norms[i].body);
      g.carriers.push_back({i});
    } else {
      g.carriers[static_cast<std::size_t>(it - g.bodies.begin())].push_back(i);
    }
  }
  return g;
}

}  // namespace

std::vector<NormSet> weakly_triggered_sets(const FormulaSet& input,
                                           const NormSet& norms,
                                           const Context& ctx) {
  std::vector<NormSet> result;
  if (!is_consistent(input, ctx)) {
    // Every singleton is weakly triggered; skip the MUS machinery entirely.
    for (std::size_t i = 0; i < norms.size(); ++i) result.push_back(norms.subset({i}));
    return result;
  }

  BodyGroups groups = group_by_body(norms);
  std::vector<std::pair<sat::GroupId, Formula>> soft;
  soft.reserve(input.size() + groups.bodies.size());
  for (std::size_t i = 0; i < input.size(); ++i) soft.emplace_back(i, input[i]);
  for (std::size_t j = 0; j < groups.bodies.size(); ++j)
    soft.emplace_back(input.size() + j, Formula::negation(groups.bodies[j]));

  std::vector<std::vector<std::size_t>> position_sets;
  for (const mus::MusResult& m : mus::enumerate_all_muses(soft, ctx)) {
    std::vector<std::size_t> positions;
    for (sat::GroupId g : m) {
      if (g < input.size()) continue;
      const auto& carriers = groups.carriers[g - input.size()];
      positions.insert(positions.end(), carriers.begin(), carriers.end());
    }
    if (positions.empty()) continue;  // the input alone was inconsistent
    std::sort(positions.begin(), positions.end());
    if (std::find(position_sets.begin(), position_sets.end(), positions) ==
        position_sets.end())
      position_sets.push_back(std::move(positions));
  }
  std::sort(position_sets.begin(), position_sets.end());
  result.reserve(position_sets.size());
  for (const auto& positions : position_sets)
    result.push_back(norms.subset(positions));
  return result;
}

FormulaSet basis2(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx) {
  FormulaSet out;
  for (const NormSet& triggered : weakly_triggered_sets(input, norms, ctx)) {
    BodyGroups groups = group_by_body(triggered);
    // One norm per distinct body; iterate selections odometer-style.
    std::vector<std::size_t> pick(groups.bodies.size(), 0);
    while (true) {
      std::vector<Formula> heads;
      for (std::size_t b = 0; b < groups.bodies.size(); ++b) {
        const Formula& head = triggered[groups.carriers[b][pick[b]]].head;
        if (std::find(heads.begin(), heads.end(), head) == heads.end())
          heads.push_back(head);
      }
      out.insert(Formula::disjunction_of(heads));
      std::size_t b = 0;
      while (b < pick.size() && ++pick[b] == groups.carriers[b].size()) {
        pick[b] = 0;
        ++b;
      }
      if (b == pick.size()) break;
    }
  }
  return out;
}

FormulaSet materialize(const NormSet& norms) {
  FormulaSet result;
  for (const Norm& n : norms)
    result.insert(Formula::disjunction(Formula::negation(n.body), n.head));
  return result;
}

FormulaSet basis4(const NormSet& norms, const FormulaSet& input,
                  const Context& ctx) {
  FormulaSet extended = input;
  for (const Formula& f : materialize(norms)) extended.insert(f);
  return basis2(norms, extended, ctx);
}

namespace {

FormulaSet prepend_input(const FormulaSet& input, const FormulaSet& rest) {
  FormulaSet result = input;
  for (const Formula& f : rest) result.insert(f);
  return result;
}

}  // namespace

FormulaSet basis_throughput(OutputOperator op, const NormSet& norms,
                            const FormulaSet& input, const Context& ctx) {
  assert(op.throughput);
  switch (op.base) {
    case BaseOperator::out1:
      return prepend_input(input, basis1(norms, input, ctx));
    case BaseOperator::out3:
      return prepend_input(input, basis3(norms, input, ctx));
    case BaseOperator::out2:
    case BaseOperator::out4:
      return prepend_input(input, materialize(norms));
  }
  return {};
}

FormulaSet basis_for(OutputOperator op, const NormSet& norms,
                     const FormulaSet& input, const Context& ctx) {
  if (op.throughput) return basis_throughput(op, norms, input, ctx);
  switch (op.base) {
    case BaseOperator::out1: return basis1(norms, input, ctx);
    case BaseOperator::out2: return basis2(norms, input, ctx);
    case BaseOperator::out3: return basis3(norms, input, ctx);
    case BaseOperator::out4: return basis4(norms, input, ctx);
  }
  return {};
}

}  // namespace iol
