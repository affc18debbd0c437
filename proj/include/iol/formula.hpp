#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace iol {

using AtomId = std::uint32_t;

/// Interns atom names. Interning is injective: equal names map to equal ids.
/// Names must be TPTP lower words ([a-z][A-Za-z0-9_]*).
class AtomTable {
 public:
  AtomId intern(std::string_view name);
  const std::string& name(AtomId id) const;
  std::size_t size() const { return names_.size(); }

  static bool is_lower_word(std::string_view s);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> ids_;
};

enum class Kind : std::uint8_t { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

/// Immutable propositional formula tree. Copies share structure and are
/// cheap; structural equality and hashing are precomputed per node.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula atom(AtomId id);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  /// Left-folded chain; empty span yields top (empty conjunction).
  static Formula conjunction_of(std::span<const Formula> fs);
  /// Left-folded chain; empty span yields bottom (empty disjunction).
  static Formula disjunction_of(std::span<const Formula> fs);

  Kind kind() const;
  AtomId atom_id() const;           // Atom nodes only
  const Formula& child() const;     // Not nodes only
  const Formula& left() const;      // binary nodes only
  const Formula& right() const;     // binary nodes only

  /// One past the largest atom id occurring in the tree (0 if none).
  AtomId atom_bound() const;

  std::size_t hash() const;
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  static Formula make(Kind kind, AtomId atom, std::vector<Formula> children);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Prints in TPTP classical syntax (~ & | => <=>, $true, $false). Chains of
/// one associative connective print flat; anything else is parenthesized so
/// that parsing the result reproduces the exact tree.
std::string to_string(const Formula& f, const AtomTable& atoms);

/// Cosmetic pass for printing: folds $true/$false through connectives and
/// drops duplicate conjuncts/disjuncts. Equivalence-preserving only; the
/// semantic pipeline never depends on it.
Formula simplified(const Formula& f);

/// Ordered, duplicate-free (under structural equality) set of formulas.
/// Insertion order is preserved for deterministic printing.
class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> fs);

  bool insert(Formula f);  // false if structurally present already
  bool contains(const Formula& f) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  std::vector<Formula>::const_iterator begin() const { return items_.begin(); }
  std::vector<Formula>::const_iterator end() const { return items_.end(); }
  std::span<const Formula> items() const { return items_; }

  AtomId atom_bound() const;

  bool operator==(const FormulaSet& other) const;  // structural, order-insensitive

 private:
  std::vector<Formula> items_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
};

}  // namespace iol
