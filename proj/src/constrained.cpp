#include "iol/constrained.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "iol/entailment.hpp"

namespace iol {

PreferenceRelation::PreferenceRelation(
    std::vector<std::vector<std::string>> tiers)
    : tiers_(std::move(tiers)) {
  for (std::size_t t = 0; t < tiers_.size(); ++t) {
    for (const std::string& name : tiers_[t]) {
      if (!rank_.emplace(name, t).second)
        throw std::invalid_argument("norm named twice in preference: " + name);
    }
  }
}

void PreferenceRelation::validate(const NormSet& norms) const {
  for (const auto& tier : tiers_) {
    for (const std::string& name : tier) {
      if (!norms.index_of(name))
        throw std::invalid_argument("preference names unknown norm: " + name);
    }
  }
}

std::size_t PreferenceRelation::rank(const std::string& name) const {
  auto it = rank_.find(name);
  return it == rank_.end() ? tiers_.size() : it->second;
}

bool PreferenceRelation::strictly_preferred(const std::string& a,
                                            const std::string& b) const {
  return rank(a) < rank(b);
}

namespace {

using IndexSet = std::vector<std::size_t>;  // ascending norm positions

bool is_subset(const IndexSet& inner, const IndexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool output_consistent(OutputOperator op, const NormSet& norms,
                       const IndexSet& member, const FormulaSet& input,
                       const FormulaSet& constraints, const Context& ctx) {
  FormulaSet joint = basis_for(op, norms.subset(member), input, ctx);
  for (const Formula& c : constraints) joint.insert(c);
  return is_consistent(joint, ctx);
}

}  // namespace

MaxFamily maxfamily(OutputOperator op, const NormSet& norms,
                    const FormulaSet& input, const FormulaSet& constraints,
                    const Context& ctx) {
  IndexSet everything(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) everything[i] = i;

  std::vector<IndexSet> frontier{everything};
  std::vector<IndexSet> accepted;
  while (!frontier.empty()) {
    std::set<IndexSet> next;
    for (const IndexSet& member : frontier) {
      ctx.check_deadline();
      bool dominated = std::any_of(
          accepted.begin(), accepted.end(),
          [&](const IndexSet& a) { return is_subset(member, a); });
      if (dominated) continue;
      if (output_consistent(op, norms, member, input, constraints, ctx)) {
        accepted.push_back(member);
      } else {
        for (std::size_t drop = 0; drop < member.size(); ++drop) {
          IndexSet smaller;
          smaller.reserve(member.size() - 1);
          for (std::size_t i = 0; i < member.size(); ++i) {
            if (i != drop) smaller.push_back(member[i]);
          }
          next.insert(std::move(smaller));
        }
      }
    }
    frontier.assign(next.begin(), next.end());
  }

  // The subset pruning already keeps the accumulator maximal; re-filter so
  // the returned family is ⊆-maximal by construction, not by accident.
  MaxFamily family;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < accepted.size(); ++j) {
      if (i != j && accepted[i] != accepted[j] &&
          is_subset(accepted[i], accepted[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) family.push_back(norms.subset(accepted[i]));
  }
  return family;
}

std::vector<FormulaSet> outfamily(OutputOperator op, const NormSet& norms,
                                  const FormulaSet& input,
                                  const FormulaSet& constraints,
                                  const Context& ctx) {
  std::vector<FormulaSet> bases;
  for (const NormSet& member : maxfamily(op, norms, input, constraints, ctx))
    bases.push_back(basis_for(op, member, input, ctx));
  return bases;
}

FormulaSet aggregate(Aggregation mode, std::span<const FormulaSet> family) {
  return mode == Aggregation::credulous ? theory_join(family)
                                        : theory_meet(family);
}

namespace {

// Every norm `weaker` has over `stronger` must be strictly outranked by
// some norm `stronger` has over `weaker`.
bool dominates(const PreferenceRelation& pref, const NormSet& stronger,
               const NormSet& weaker) {
  std::vector<std::string> extra_strong;
  for (const Norm& n : stronger) {
    if (!weaker.index_of(n.name)) extra_strong.push_back(n.name);
  }
  for (const Norm& n : weaker) {
    if (stronger.index_of(n.name)) continue;
    bool beaten = std::any_of(
        extra_strong.begin(), extra_strong.end(), [&](const std::string& s) {
          return pref.strictly_preferred(s, n.name);
        });
    if (!beaten) return false;
  }
  return true;
}

bool strictly_dominates(const PreferenceRelation& pref, const NormSet& a,
                        const NormSet& b) {
  return dominates(pref, a, b) && !dominates(pref, b, a);
}

}  // namespace

MaxFamily pref_family(const PreferenceRelation& pref, const MaxFamily& family) {
  if (pref.empty()) return family;
  MaxFamily preferred;
  for (const NormSet& candidate : family) {
    bool beaten = std::any_of(
        family.begin(), family.end(), [&](const NormSet& other) {
          return strictly_dominates(pref, other, candidate);
        });
    if (!beaten) preferred.push_back(candidate);
  }
  return preferred;
}

FormulaSet prefout(Aggregation mode, OutputOperator op, const NormSet& norms,
                   const FormulaSet& input, const FormulaSet& constraints,
                   const PreferenceRelation& pref, const Context& ctx) {
  MaxFamily family = maxfamily(op, norms, input, constraints, ctx);
  MaxFamily preferred = pref_family(pref, family);
  std::vector<FormulaSet> bases;
  bases.reserve(preferred.size());
  for (const NormSet& member : preferred)
    bases.push_back(basis_for(op, member, input, ctx));
  return aggregate(mode, bases);
}

}  // namespace iol
