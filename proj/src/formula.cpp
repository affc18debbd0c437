#include "iol/formula.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace iol {

bool AtomTable::is_lower_word(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

AtomId AtomTable::intern(std::string_view name) {
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  if (!is_lower_word(name)) {
    throw std::invalid_argument("atom name is not a lower word: '" +
                                std::string(name) + "'");
  }
  AtomId id = static_cast<AtomId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

const std::string& AtomTable::name(AtomId id) const {
  if (id >= names_.size()) throw std::out_of_range("unknown atom id");
  return names_[id];
}

struct Formula::Node {
  Kind kind;
  AtomId atom = 0;
  std::vector<Formula> children;
  std::size_t hash = 0;
  AtomId atom_bound = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind kind, AtomId atom, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->atom = atom;
  node->children = std::move(children);
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  AtomId bound = kind == Kind::Atom ? atom + 1 : 0;
  for (const Formula& c : node->children) {
    h = mix(h, c.hash());
    bound = std::max(bound, c.atom_bound());
  }
  if (kind == Kind::Atom) h = mix(h, atom);
  node->hash = h;
  node->atom_bound = bound;
  return Formula(std::shared_ptr<const Node>(std::move(node)));
}

Formula Formula::top() { return make(Kind::Top, 0, {}); }
Formula Formula::bottom() { return make(Kind::Bottom, 0, {}); }
Formula Formula::atom(AtomId id) { return make(Kind::Atom, id, {}); }
Formula Formula::negation(Formula f) {
  return make(Kind::Not, 0, {std::move(f)});
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::And, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Kind::Or, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Kind::Implies, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return make(Kind::Iff, 0, {std::move(lhs), std::move(rhs)});
}

Formula Formula::conjunction_of(std::span<const Formula> fs) {
  if (fs.empty()) return top();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

Formula Formula::disjunction_of(std::span<const Formula> fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

Kind Formula::kind() const { return node_->kind; }

AtomId Formula::atom_id() const {
  assert(node_->kind == Kind::Atom);
  return node_->atom;
}

const Formula& Formula::child() const {
  assert(node_->kind == Kind::Not);
  return node_->children[0];
}

const Formula& Formula::left() const {
  assert(node_->children.size() == 2);
  return node_->children[0];
}

const Formula& Formula::right() const {
  assert(node_->children.size() == 2);
  return node_->children[1];
}

AtomId Formula::atom_bound() const { return node_->atom_bound; }

std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind)
    return false;
  if (node_->kind == Kind::Atom) return node_->atom == other.node_->atom;
  if (node_->children.size() != other.node_->children.size()) return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (node_->children[i] != other.node_->children[i]) return false;
  }
  return true;
}

namespace {

bool is_binary(Kind k) {
  return k == Kind::And || k == Kind::Or || k == Kind::Implies ||
         k == Kind::Iff;
}

const char* connective(Kind k) {
  switch (k) {
    case Kind::And: return " & ";
    case Kind::Or: return " | ";
    case Kind::Implies: return " => ";
    case Kind::Iff: return " <=> ";
    default: return "";
  }
}

// Left spines of & and | print flat; every other binary child is wrapped so
// the output reparses to the identical tree (TPTP non-associativity).
void print(std::ostream& os, const Formula& f, const AtomTable& atoms,
           Kind parent, bool left_of_parent) {
  Kind k = f.kind();
  switch (k) {
    case Kind::Top: os << "$true"; return;
    case Kind::Bottom: os << "$false"; return;
    case Kind::Atom: os << atoms.name(f.atom_id()); return;
    case Kind::Not:
      os << "~";
      print(os, f.child(), atoms, Kind::Not, false);
      return;
    default: break;
  }
  bool flat_chain = (parent == k) && left_of_parent &&
                    (k == Kind::And || k == Kind::Or);
  bool parens = is_binary(parent) || parent == Kind::Not;
  if (flat_chain) parens = false;
  if (parens) os << "(";
  print(os, f.left(), atoms, k, true);
  os << connective(k);
  print(os, f.right(), atoms, k, false);
  if (parens) os << ")";
}

}  // namespace

std::string to_string(const Formula& f, const AtomTable& atoms) {
  std::ostringstream os;
  print(os, f, atoms, Kind::Top, false);  // Top acts as "no parent"
  return os.str();
}

namespace {

void collect_args(const Formula& f, Kind k, std::vector<Formula>& out) {
  if (f.kind() == k) {
    collect_args(f.left(), k, out);
    collect_args(f.right(), k, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

Formula simplified(const Formula& f) {
  switch (f.kind()) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Atom:
      return f;
    case Kind::Not: {
      Formula c = simplified(f.child());
      if (c.kind() == Kind::Top) return Formula::bottom();
      if (c.kind() == Kind::Bottom) return Formula::top();
      return Formula::negation(c);
    }
    case Kind::And:
    case Kind::Or: {
      Kind k = f.kind();
      Kind absorbing = k == Kind::And ? Kind::Bottom : Kind::Top;
      Kind neutral = k == Kind::And ? Kind::Top : Kind::Bottom;
      std::vector<Formula> raw;
      collect_args(f, k, raw);
      std::vector<Formula> args;
      for (const Formula& a : raw) {
        Formula s = simplified(a);
        if (s.kind() == absorbing)
          return absorbing == Kind::Bottom ? Formula::bottom()
                                           : Formula::top();
        if (s.kind() == neutral) continue;
        if (std::find(args.begin(), args.end(), s) == args.end())
          args.push_back(s);
      }
      if (args.empty())
        return neutral == Kind::Top ? Formula::top() : Formula::bottom();
      return k == Kind::And ? Formula::conjunction_of(args)
                            : Formula::disjunction_of(args);
    }
    case Kind::Implies: {
      Formula a = simplified(f.left());
      Formula b = simplified(f.right());
      if (a.kind() == Kind::Bottom || b.kind() == Kind::Top)
        return Formula::top();
      if (a.kind() == Kind::Top) return b;
      if (b.kind() == Kind::Bottom) return simplified(Formula::negation(a));
      return Formula::implication(a, b);
    }
    case Kind::Iff: {
      Formula a = simplified(f.left());
      Formula b = simplified(f.right());
      if (a.kind() == Kind::Top) return b;
      if (b.kind() == Kind::Top) return a;
      if (a.kind() == Kind::Bottom) return simplified(Formula::negation(b));
      if (b.kind() == Kind::Bottom) return simplified(Formula::negation(a));
      if (a == b) return Formula::top();
      return Formula::equivalence(a, b);
    }
  }
  return f;
}

FormulaSet::FormulaSet(std::initializer_list<Formula> fs) {
  for (const Formula& f : fs) insert(f);
}

bool FormulaSet::insert(Formula f) {
  if (contains(f)) return false;
  by_hash_[f.hash()].push_back(items_.size());
  items_.push_back(std::move(f));
  return true;
}

bool FormulaSet::contains(const Formula& f) const {
  auto it = by_hash_.find(f.hash());
  if (it == by_hash_.end()) return false;
  for (std::size_t i : it->second) {
    if (items_[i] == f) return true;
  }
  return false;
}

AtomId FormulaSet::atom_bound() const {
  AtomId bound = 0;
  for (const Formula& f : items_) bound = std::max(bound, f.atom_bound());
  return bound;
}

bool FormulaSet::operator==(const FormulaSet& other) const {
  if (size() != other.size()) return false;
  for (const Formula& f : items_) {
    if (!other.contains(f)) return false;
  }
  return true;
}

}  // namespace iol
