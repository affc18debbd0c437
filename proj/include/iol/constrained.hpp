#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "iol/context.hpp"
#include "iol/detachment.hpp"
#include "iol/formula.hpp"
#include "iol/norms.hpp"

namespace iol {

/// Constraint set for constrained reasoning: either explicit formulas or
/// the marker "use the input", resolved before any reasoning runs.
struct ConstraintSpec {
  bool same_as_input = false;
  FormulaSet formulas;

  static ConstraintSpec input_marker() { return {true, {}}; }
  static ConstraintSpec explicit_set(FormulaSet fs) {
    return {false, std::move(fs)};
  }

  const FormulaSet& resolve(const FormulaSet& input) const {
    return same_as_input ? input : formulas;
  }
};

/// Preference between norms as ordered equivalence tiers of norm names:
/// earlier tiers are strictly preferred to later ones, names within a tier
/// are equally preferred, unmentioned norms form an implicit last tier.
class PreferenceRelation {
 public:
  PreferenceRelation() = default;
  explicit PreferenceRelation(std::vector<std::vector<std::string>> tiers);

  bool empty() const { return tiers_.empty(); }
  const std::vector<std::vector<std::string>>& tiers() const { return tiers_; }

  /// Throws std::invalid_argument when a tier names an unknown norm or a
  /// name appears in two tiers.
  void validate(const NormSet& norms) const;

  bool strictly_preferred(const std::string& a, const std::string& b) const;

 private:
  std::size_t rank(const std::string& name) const;

  std::vector<std::vector<std::string>> tiers_;
  std::unordered_map<std::string, std::size_t> rank_;
};

/// Family of ⊆-maximal norm subsets whose output stays consistent with the
/// constraints; members are pairwise ⊆-incomparable.
using MaxFamily = std::vector<NormSet>;

/// Top-down lattice search: starting from the whole norm set, keep subsets
/// whose basis is consistent with the constraints and replace the failing
/// ones by all their one-smaller subsets. The frontier is deduplicated,
/// candidates below an accepted set are pruned, and the accumulated family
/// is reduced to its ⊆-maximal members. Empty iff even the empty subset's
/// output is inconsistent with the constraints.
MaxFamily maxfamily(OutputOperator op, const NormSet& norms,
                    const FormulaSet& input, const FormulaSet& constraints,
                    const Context& ctx = {});

/// One basis per maxfamily member.
std::vector<FormulaSet> outfamily(OutputOperator op, const NormSet& norms,
                                  const FormulaSet& input,
                                  const FormulaSet& constraints,
                                  const Context& ctx = {});

enum class Aggregation { credulous, skeptical };

/// Credulous output joins the family's bases, skeptical output meets them
/// (empty family: join is empty, meet is {$false}).
FormulaSet aggregate(Aggregation mode, std::span<const FormulaSet> family);

/// The members of the family not strictly dominated under the set lifting
/// of the preference: M1 strictly dominates M2 when every norm M2 has over
/// M1 is strictly outranked by some norm M1 has over M2, and not conversely.
/// An empty preference returns the family unchanged.
MaxFamily pref_family(const PreferenceRelation& pref, const MaxFamily& family);

/// Aggregated output over the preferred family members.
FormulaSet prefout(Aggregation mode, OutputOperator op, const NormSet& norms,
                   const FormulaSet& input, const FormulaSet& constraints,
                   const PreferenceRelation& pref, const Context& ctx = {});

}  // namespace iol
