#include "doctest.h"

#include <random>
#include <vector>

#include "iol/entailment.hpp"
#include "support.hpp"

using namespace iol;

TEST_SUITE_BEGIN("entailment");

TEST_CASE("entailment fixtures") {
  AtomTable atoms;
  Formula x = Formula::atom(atoms.intern("x"));
  Formula y = Formula::atom(atoms.intern("y"));
  CHECK(entails(FormulaSet{x, y}, Formula::conjunction(x, y)));
  CHECK(entails(FormulaSet{}, Formula::top()));
  CHECK_FALSE(entails(FormulaSet{}, x));

  Formula ticket = Formula::atom(atoms.intern("ticket"));
  Formula fine = Formula::atom(atoms.intern("fine"));
  Formula pay = Formula::atom(atoms.intern("pay"));
  FormulaSet basis{Formula::disjunction(ticket, fine), pay};
  CHECK(entails(basis, pay));
}

TEST_CASE("consistency fixtures") {
  AtomTable atoms;
  Formula x = Formula::atom(atoms.intern("x"));
  CHECK_FALSE(is_consistent(FormulaSet{x, Formula::negation(x)}));
  CHECK(is_consistent(FormulaSet{}));

  Formula h = Formula::atom(atoms.intern("h"));
  Formula t = Formula::atom(atoms.intern("t"));
  CHECK_FALSE(is_consistent(FormulaSet{h, t, Formula::negation(t)}));
}

TEST_CASE("entailment is reflexive and monotone") {
  std::mt19937 rng(3);
  for (int round = 0; round < 100; ++round) {
    FormulaSet phi;
    std::uniform_int_distribution<int> count(1, 3);
    int k = count(rng);
    for (int i = 0; i < k; ++i) phi.insert(support::random_formula(rng, 4, 2));
    for (const Formula& member : phi) CHECK(entails(phi, member));

    Formula goal = support::random_formula(rng, 4, 2);
    if (entails(phi, goal)) {
      FormulaSet larger = phi;
      larger.insert(support::random_formula(rng, 4, 2));
      CHECK(entails(larger, goal));
    }
  }
}

TEST_CASE("entailment agrees with truth tables over small vocabularies") {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    FormulaSet premises;
    std::uniform_int_distribution<int> count(0, 3);
    int k = count(rng);
    for (int i = 0; i < k; ++i)
      premises.insert(support::random_formula(rng, 4, 2));
    Formula goal = support::random_formula(rng, 4, 2);
    CHECK(entails(premises, goal) == support::tt_entails(premises, goal));
  }
}

TEST_CASE("theory meet fixtures") {
  AtomTable atoms;
  Formula t = Formula::atom(atoms.intern("t"));
  Formula x = Formula::atom(atoms.intern("x"));
  Formula y = Formula::atom(atoms.intern("y"));

  std::vector<FormulaSet> single{FormulaSet{Formula::negation(t)}};
  CHECK(bases_equivalent(theory_meet(single),
                         FormulaSet{Formula::negation(t)}));

  std::vector<FormulaSet> two{FormulaSet{x}, FormulaSet{y}};
  CHECK(bases_equivalent(theory_meet(two),
                         FormulaSet{Formula::disjunction(x, y)}));

  FormulaSet empty_meet = theory_meet({});
  REQUIRE(empty_meet.size() == 1);
  CHECK(empty_meet[0] == Formula::bottom());
}

TEST_CASE("theory join fixtures") {
  AtomTable atoms;
  Formula t = Formula::atom(atoms.intern("t"));
  std::vector<FormulaSet> single{FormulaSet{Formula::negation(t)}};
  FormulaSet join = theory_join(single);
  REQUIRE(join.size() == 1);
  CHECK(join[0] == Formula::negation(t));

  CHECK(theory_join({}).empty());

  std::vector<FormulaSet> clashing{FormulaSet{t}, FormulaSet{Formula::negation(t)}};
  CHECK(entails(theory_join(clashing), Formula::bottom()));
}

TEST_CASE("meet is the greatest lower bound on sampled members") {
  std::mt19937 rng(9);
  for (int round = 0; round < 60; ++round) {
    FormulaSet b1, b2;
    std::uniform_int_distribution<int> count(1, 3);
    for (int i = count(rng); i > 0; --i)
      b1.insert(support::random_formula(rng, 4, 2));
    for (int i = count(rng); i > 0; --i)
      b2.insert(support::random_formula(rng, 4, 2));
    std::vector<FormulaSet> both{b1, b2};
    FormulaSet meet = theory_meet(both);
    for (int probe = 0; probe < 10; ++probe) {
      Formula phi = support::random_formula(rng, 4, 2);
      bool in_meet = entails(meet, phi);
      bool in_both = entails(b1, phi) && entails(b2, phi);
      CHECK(in_meet == in_both);
    }
  }
}

TEST_SUITE_END();
