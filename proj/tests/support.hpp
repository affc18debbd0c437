#pragma once

// Shared test machinery: deterministic random formula generation from a
// bounded grammar, truth-table checks that stay independent of the SAT
// kernel, and the recurring small fixtures.

#include <random>
#include <string>
#include <vector>

#include "iol/formula.hpp"
#include "iol/norms.hpp"
#include "iol/oracle.hpp"
#include "iol/sat.hpp"

namespace support {

using namespace iol;

inline Formula random_formula(std::mt19937& rng, std::size_t num_atoms,
                              int depth) {
  std::uniform_int_distribution<int> kind_dist(0, depth <= 0 ? 1 : 7);
  std::uniform_int_distribution<std::size_t> atom_dist(0, num_atoms - 1);
  switch (kind_dist(rng)) {
    case 0:
    case 1:
      return Formula::atom(static_cast<AtomId>(atom_dist(rng)));
    case 2:
      return Formula::negation(random_formula(rng, num_atoms, depth - 1));
    case 3:
      return Formula::conjunction(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    case 4:
      return Formula::disjunction(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    case 5:
      return Formula::implication(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    case 6:
      return Formula::equivalence(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    default:
      return kind_dist(rng) % 2 == 0 ? Formula::top() : Formula::bottom();
  }
}

/// Truth-table satisfiability of a formula set over its own vocabulary;
/// uses only the oracle evaluator, never the SAT kernel.
inline bool tt_satisfiable(const FormulaSet& fs) {
  std::size_t n = fs.atom_bound();
  std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    oracle::Valuation v(n, false);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    bool all = true;
    for (const Formula& f : fs) all = all && oracle::evaluate(f, v);
    if (all) return true;
  }
  return false;
}

inline bool tt_entails(const FormulaSet& premises, const Formula& goal) {
  std::size_t n = std::max<AtomId>(premises.atom_bound(), goal.atom_bound());
  std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    oracle::Valuation v(n, false);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    bool all = true;
    for (const Formula& f : premises) all = all && oracle::evaluate(f, v);
    if (all && !oracle::evaluate(goal, v)) return false;
  }
  return true;
}

/// Truth-table satisfiability of a clause set (all variables free).
inline bool tt_clauses_satisfiable(const sat::ClauseSet& cs) {
  int n = cs.num_variables();
  std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    bool all = true;
    for (const sat::Clause& c : cs.clauses()) {
      bool some = false;
      for (sat::Literal l : c.literals)
        some = some || (((mask >> (l.var - 1)) & 1) == (l.positive ? 1u : 0u));
      if (!some) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// N = {(a,x), (b,y), (x & y, z)} over atoms a,b,x,y,z.
struct ChainFixture {
  AtomTable atoms;
  Formula a, b, x, y, z;
  NormSet norms;

  ChainFixture()
      : a(Formula::atom(atoms.intern("a"))),
        b(Formula::atom(atoms.intern("b"))),
        x(Formula::atom(atoms.intern("x"))),
        y(Formula::atom(atoms.intern("y"))),
        z(Formula::atom(atoms.intern("z"))) {
    norms.add({"n1", a, x});
    norms.add({"n2", b, y});
    norms.add({"n3", Formula::conjunction(x, y), z});
  }
};

// The nine-norm court competence conflict with its fact situation; same
// structure as the ecb_*.p problem files, in the same norm order.
struct CourtFixture {
  AtomTable atoms;
  Formula uv, follows, prelim, interp, appl, prop, adeq, ecb, sound, abstract,
      concrete;
  NormSet norms;
  FormulaSet input;

  CourtFixture()
      : uv(Formula::atom(atoms.intern("ultraVires"))),
        follows(Formula::atom(atoms.intern("follows"))),
        prelim(Formula::atom(atoms.intern("prelim"))),
        interp(Formula::atom(atoms.intern("interp"))),
        appl(Formula::atom(atoms.intern("appl"))),
        prop(Formula::atom(atoms.intern("prop"))),
        adeq(Formula::atom(atoms.intern("adeq"))),
        ecb(Formula::atom(atoms.intern("ecb"))),
        sound(Formula::atom(atoms.intern("sound"))),
        abstract(Formula::atom(atoms.intern("abstract"))),
        concrete(Formula::atom(atoms.intern("concrete"))) {
    Formula omission = Formula::conjunction(
        Formula::conjunction(prelim, Formula::negation(adeq)), ecb);
    Formula conducted = Formula::conjunction(prelim, adeq);
    norms.add({"n1", uv, Formula::negation(follows)});
    norms.add({"n2", Formula::top(), follows});
    norms.add({"n3", prelim, interp});
    norms.add({"n4", prelim, Formula::negation(appl)});
    norms.add({"n5", prelim, prop});
    norms.add({"n9", conducted, sound});
    norms.add({"n8", omission, sound});
    norms.add({"n6", conducted, sound});
    norms.add({"n7", omission, Formula::negation(sound)});
    input.insert(prelim);
    input.insert(prop);
    input.insert(Formula::negation(adeq));
    input.insert(ecb);
    input.insert(Formula::implication(interp, abstract));
    input.insert(Formula::implication(appl, concrete));
    input.insert(Formula::negation(Formula::equivalence(abstract, concrete)));
    input.insert(Formula::implication(adeq, Formula::negation(abstract)));
    input.insert(Formula::implication(Formula::negation(sound), uv));
  }
};

// N = {(true,h), (h,t), (~h,~t)} over atoms h,t; the standard
// contrary-to-duty scenario.
struct ContraryToDutyFixture {
  AtomTable atoms;
  Formula h, t;
  NormSet norms;
  FormulaSet input;

  ContraryToDutyFixture()
      : h(Formula::atom(atoms.intern("h"))),
        t(Formula::atom(atoms.intern("t"))) {
    norms.add({"n1", Formula::top(), h});
    norms.add({"n2", h, t});
    norms.add({"n3", Formula::negation(h), Formula::negation(t)});
    input.insert(Formula::negation(h));
  }
};

}  // namespace support
