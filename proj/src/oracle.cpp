#include "iol/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iol::oracle {

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Atom: return v[f.atom_id()];
    case Kind::Not: return !evaluate(f.child(), v);
    case Kind::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
    case Kind::Or: return evaluate(f.left(), v) || evaluate(f.right(), v);
    case Kind::Implies:
      return !evaluate(f.left(), v) || evaluate(f.right(), v);
    case Kind::Iff: return evaluate(f.left(), v) == evaluate(f.right(), v);
  }
  return false;
}

namespace {

class Vocabulary {
 public:
  Vocabulary(const NormSet& norms, const FormulaSet& input,
             const Formula& candidate, std::size_t atom_bound) {
    AtomId bound = std::max(input.atom_bound(), candidate.atom_bound());
    for (const Norm& n : norms) {
      bound = std::max({bound, n.body.atom_bound(), n.head.atom_bound()});
    }
    size_ = bound;
    if (size_ > atom_bound)
      throw std::invalid_argument(
          "oracle vocabulary exceeds the configured atom bound (" +
          std::to_string(size_) + " > " + std::to_string(atom_bound) + ")");
  }

  /// Applies fn to every valuation; stops early when fn returns false.
  /// Returns false iff some application returned false.
  template <typename Fn>
  bool for_each_valuation(Fn&& fn) const {
    std::size_t total = std::size_t{1} << size_;
    Valuation v(size_, false);
    for (std::size_t mask = 0; mask < total; ++mask) {
      for (std::size_t i = 0; i < size_; ++i) v[i] = (mask >> i) & 1;
      if (!fn(v)) return false;
    }
    return true;
  }

 private:
  std::size_t size_ = 0;
};

bool satisfies_all(const FormulaSet& fs, const Valuation& v) {
  return std::all_of(fs.begin(), fs.end(),
                     [&](const Formula& f) { return evaluate(f, v); });
}

bool tt_entails(const Vocabulary& voc, const FormulaSet& premises,
                const Formula& goal) {
  return voc.for_each_valuation([&](const Valuation& v) {
    return !satisfies_all(premises, v) || evaluate(goal, v);
  });
}

FormulaSet with(const FormulaSet& base, const FormulaSet& extra) {
  FormulaSet out = base;
  for (const Formula& f : extra) out.insert(f);
  return out;
}

FormulaSet simple_minded_heads(const Vocabulary& voc, const NormSet& norms,
                               const FormulaSet& input) {
  FormulaSet heads;
  for (const Norm& n : norms) {
    if (tt_entails(voc, input, n.body)) heads.insert(n.head);
  }
  return heads;
}

FormulaSet reusable_heads(const Vocabulary& voc, const NormSet& norms,
                          const FormulaSet& input) {
  FormulaSet closed = input;
  std::vector<bool> detached(norms.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < norms.size(); ++i) {
      if (detached[i]) continue;
      if (tt_entails(voc, closed, norms[i].body)) {
        detached[i] = true;
        closed.insert(norms[i].head);
        changed = true;
      }
    }
  }
  FormulaSet heads;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (detached[i]) heads.insert(norms[i].head);
  }
  return heads;
}

FormulaSet all_heads(const NormSet& norms) {
  FormulaSet heads;
  for (const Norm& n : norms) heads.insert(n.head);
  return heads;
}

bool triggered_heads_hold(const NormSet& norms, const Valuation& v) {
  return std::all_of(norms.begin(), norms.end(), [&](const Norm& n) {
    return !evaluate(n.body, v) || evaluate(n.head, v);
  });
}

// Basic output: every complete extension of the input must output the
// candidate from the heads of the norms it triggers. Complete extensions
// are the satisfying valuations; with none left only the full language
// remains, which outputs the heads of all norms.
bool basic_member(const Vocabulary& voc, const NormSet& norms,
                  const FormulaSet& input, const Formula& candidate,
                  bool reusable) {
  bool any_extension = false;
  bool ok = voc.for_each_valuation([&](const Valuation& v) {
    if (!satisfies_all(input, v)) return true;
    if (reusable && !triggered_heads_hold(norms, v)) return true;
    any_extension = true;
    FormulaSet heads;
    for (const Norm& n : norms) {
      if (evaluate(n.body, v)) heads.insert(n.head);
    }
    return tt_entails(voc, heads, candidate);
  });
  if (!any_extension) return tt_entails(voc, all_heads(norms), candidate);
  return ok;
}

// Throughput for out2/out4: complete extensions whose triggered heads all
// hold output exactly their own theory, every other extension collapses.
bool basic_throughput_member(const Vocabulary& voc, const NormSet& norms,
                             const FormulaSet& input,
                             const Formula& candidate) {
  return voc.for_each_valuation([&](const Valuation& v) {
    if (!satisfies_all(input, v)) return true;
    if (!triggered_heads_hold(norms, v)) return true;
    return evaluate(candidate, v);
  });
}

}  // namespace

bool member(OutputOperator op, const NormSet& norms, const FormulaSet& input,
            const Formula& candidate, std::size_t atom_bound) {
  Vocabulary voc(norms, input, candidate, atom_bound);
  if (op.throughput) {
    switch (op.base) {
      case BaseOperator::out1:
        return tt_entails(voc, with(input, simple_minded_heads(voc, norms, input)),
                          candidate);
      case BaseOperator::out3:
        return tt_entails(voc, with(input, reusable_heads(voc, norms, input)),
                          candidate);
      case BaseOperator::out2:
      case BaseOperator::out4:
        return basic_throughput_member(voc, norms, input, candidate);
    }
  }
  switch (op.base) {
    case BaseOperator::out1:
      return tt_entails(voc, simple_minded_heads(voc, norms, input), candidate);
    case BaseOperator::out3:
      return tt_entails(voc, reusable_heads(voc, norms, input), candidate);
    case BaseOperator::out2:
      return basic_member(voc, norms, input, candidate, false);
    case BaseOperator::out4:
      return basic_member(voc, norms, input, candidate, true);
  }
  return false;
}

}  // namespace iol::oracle
