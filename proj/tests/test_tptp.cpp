#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "iol/szs.hpp"
#include "iol/tptp.hpp"
#include "support.hpp"

using namespace iol;

namespace {

const char* kParkingText = R"(
tff(simple, logic,
    $$iol == [ $$operator == $$out4 ] ).

tff(norm1, axiom, {$$norm} @ (parking, ticket | fine) ).
tff(norm2, axiom, {$$norm} @ (ticket, pay) ).
tff(norm3, axiom, {$$norm} @ (fine, pay) ).

tff(input1, hypothesis, parking).
)";

const char* kContraryToDutyText = R"(
tff(my_spec, logic, (
    $$iol == [ $$operator == $$out3,
               $$constrained == $$skeptical,
               $$constraints == [~ helping] ] )).

tff(norm1, axiom, {$$norm} @ ($true, helping) ).
tff(norm2, axiom, {$$norm} @ (helping, telling) ).
tff(norm3, axiom, {$$norm} @ (~helping, ~telling) ).

tff(fact_not_helping, hypothesis, ~helping).

tff(conjecturedOutput1, conjecture, ~telling).
tff(conjecturedOutput1, conjecture, ~helping).
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_SUITE_BEGIN("tptp");

TEST_CASE("parses the unconstrained traffic problem") {
  tptp::Problem p = tptp::parse_problem(kParkingText, "parking.p");
  CHECK(p.spec.op == OutputOperator{BaseOperator::out4, false});
  CHECK_FALSE(p.spec.constrained.has_value());
  REQUIRE(p.norms.size() == 3);
  CHECK(p.norms[0].name == "norm1");
  CHECK(to_string(p.norms[0].body, p.atoms) == "parking");
  CHECK(to_string(p.norms[0].head, p.atoms) == "ticket | fine");
  CHECK(to_string(p.norms[1].head, p.atoms) == "pay");
  REQUIRE(p.input.size() == 1);
  CHECK(to_string(p.input[0], p.atoms) == "parking");
  CHECK(p.conjectures.empty());
  CHECK(p.warnings.empty());
}

TEST_CASE("parses the constrained problem with conjectures") {
  tptp::Problem p = tptp::parse_problem(kContraryToDutyText, "chisholm.p");
  CHECK(p.spec.op == OutputOperator{BaseOperator::out3, false});
  REQUIRE(p.spec.constrained.has_value());
  CHECK(*p.spec.constrained == Aggregation::skeptical);
  CHECK_FALSE(p.spec.constraints.same_as_input);
  REQUIRE(p.spec.constraints.formulas.size() == 1);
  CHECK(to_string(p.spec.constraints.formulas[0], p.atoms) == "~helping");
  REQUIRE(p.norms.size() == 3);
  CHECK(p.norms[0].body == Formula::top());
  REQUIRE(p.conjectures.size() == 2);
  CHECK(p.conjectures[0].first == "conjecturedOutput1");
  CHECK(to_string(p.conjectures[1].second, p.atoms) == "~helping");
  // Reused conjecture name is tolerated with a warning.
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("duplicate conjecture name") != std::string::npos);
}

TEST_CASE("parses the case-study preference and input-marker constraints") {
  std::string text = read_file(std::string(IOL_PROBLEM_DIR) + "/ecb_pref_equal.p");
  tptp::Problem p = tptp::parse_problem(text, "ecb_pref_equal.p");
  CHECK(p.spec.op == OutputOperator{BaseOperator::out3, false});
  REQUIRE(p.spec.constrained.has_value());
  CHECK(p.spec.constraints.same_as_input);
  REQUIRE(p.spec.preference.tiers().size() == 3);
  CHECK(p.spec.preference.tiers()[0] ==
        std::vector<std::string>{"n6", "n7", "n8", "n9"});
  CHECK(p.spec.preference.tiers()[1] == std::vector<std::string>{"n1"});
  CHECK(p.spec.preference.tiers()[2] == std::vector<std::string>{"n2"});
  CHECK(p.norms.size() == 9);
  CHECK(p.input.size() == 9);
  // The two formula-identical norms stay distinct elements.
  REQUIRE(p.norms.index_of("n6").has_value());
  REQUIRE(p.norms.index_of("n9").has_value());
  const Norm& n6 = p.norms[*p.norms.index_of("n6")];
  const Norm& n9 = p.norms[*p.norms.index_of("n9")];
  CHECK(n6.body == n9.body);
  CHECK(n6.head == n9.head);
}

TEST_CASE("all seven shipped problem files parse") {
  for (const char* name :
       {"parking.p", "chisholm.p", "ecb_unconstrained.p", "ecb_skeptical.p",
        "ecb_pref_equal.p", "ecb_pref_national.p", "ecb_pref_european.p"}) {
    std::string text = read_file(std::string(IOL_PROBLEM_DIR) + "/" + name);
    CHECK_NOTHROW(tptp::parse_problem(text, name));
  }
}

TEST_CASE("throughput accepts explicit values and empty defaults") {
  std::string with_value =
      "tff(s, logic, $$iol == [ $$operator == $$out1, $$throughput == $true ]).";
  CHECK(tptp::parse_problem(with_value, "t.p").spec.op.throughput);
  std::string empty_value =
      "tff(s, logic, $$iol == [ $$operator == $$out1, $$throughput == ]).";
  CHECK_FALSE(tptp::parse_problem(empty_value, "t.p").spec.op.throughput);
  std::string omitted = "tff(s, logic, $$iol == [ $$operator == $$out1 ]).";
  CHECK_FALSE(tptp::parse_problem(omitted, "t.p").spec.op.throughput);
}

TEST_CASE("comments and source fields are skipped") {
  std::string text = R"(
% a line comment
/* a block
   comment */
tff(s, logic, $$iol == [ $$operator == $$out1 ]).
tff(h, hypothesis, p & q, source('somewhere.ax'), [relevance(1.0)]).
)";
  tptp::Problem p = tptp::parse_problem(text, "c.p");
  REQUIRE(p.input.size() == 1);
  CHECK(to_string(p.input[0], p.atoms) == "p & q");
}

TEST_CASE("reversed implication swaps its operands") {
  std::string text = R"(
tff(s, logic, $$iol == [ $$operator == $$out1 ]).
tff(h1, hypothesis, q <= p).
tff(h2, hypothesis, (a <= b) <= c).
)";
  tptp::Problem p = tptp::parse_problem(text, "rev.p");
  REQUIRE(p.input.size() == 2);
  CHECK(to_string(p.input[0], p.atoms) == "p => q");
  CHECK(to_string(p.input[1], p.atoms) == "c => (b => a)");
  // Non-associative like the other arrows.
  CHECK_THROWS_AS(
      tptp::parse_problem("tff(s, logic, $$iol == [ $$operator == $$out1 ]).\n"
                          "tff(h, hypothesis, a <= b <= c).",
                          "rev.p"),
      tptp::ParseError);
}

TEST_CASE("annotated formulas may carry numeric names") {
  std::string text = R"(
tff(s, logic, $$iol == [ $$operator == $$out1 ]).
tff(12, hypothesis, p).
tff(13, conjecture, p).
)";
  tptp::Problem p = tptp::parse_problem(text, "num.p");
  CHECK(p.input.size() == 1);
  REQUIRE(p.conjectures.size() == 1);
  CHECK(p.conjectures[0].first == "13");
}

TEST_CASE("quoted atoms normalize to their lower-word content") {
  std::string text = R"(
tff(s, logic, $$iol == [ $$operator == $$out1 ]).
tff(h, hypothesis, 'quoted' & quoted).
)";
  tptp::Problem p = tptp::parse_problem(text, "q.p");
  CHECK(to_string(p.input[0], p.atoms) == "quoted & quoted");
}

TEST_CASE("rejections carry positions and clear messages") {
  auto reject = [](const std::string& text, const std::string& needle) {
    try {
      tptp::parse_problem(text, "bad.p");
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const tptp::ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
      CHECK(e.line >= 1);
    }
  };
  std::string spec = "tff(s, logic, $$iol == [ $$operator == $$out1 ]).\n";

  reject("tff(h, hypothesis, p).", "missing logic specification");
  reject(spec + spec, "duplicate logic specification");
  reject("tff(s, logic, $$iol == [ $$throughput == $true ]).",
         "missing $$operator");
  reject(spec + "tff(h, guess, p).", "unknown role");
  reject(spec + "tff(h, hypothesis, {$$norm} @ (p, q)).",
         "norm payload outside an axiom");
  reject(spec + "tff(a, axiom, p => q).", "requires a norm payload");
  reject(spec + "tff(h, hypothesis, ! [X] : p).", "quantifiers");
  reject(spec + "tff(h, hypothesis, f(a)).", "terms with arguments");
  reject(spec + "tff(h, hypothesis, p & q | r).", "parenthesize");
  reject(spec + "tff(h, hypothesis, p => q => r).", "parenthesize");
  reject(spec + "include('Axioms/GEO001-0.ax').", "include");
  reject(spec + "tff(h, hypothesis, p &).", "expected a formula");
  reject(spec + "tff(h, hypothesis, p", "expected");
  reject("tff(s, logic, $$iol == [ $$operator == $$out9 ]).",
         "unknown output operator");
  reject(spec + "tff(n, axiom, {$$norm} @ (p, q)).\n" +
             "tff(n, axiom, {$$norm} @ (p, r)).",
         "duplicate norm name");
  std::string pref_spec =
      "tff(s, logic, $$iol == [ $$operator == $$out1, "
      "$$constrained == $$skeptical, $$preference == [n1, nope] ]).\n";
  reject(pref_spec + "tff(n1, axiom, {$$norm} @ (p, q)).",
         "unknown norm");
}

TEST_CASE("mutations of shipped files are rejected") {
  for (const char* name :
       {"parking.p", "chisholm.p", "ecb_unconstrained.p", "ecb_skeptical.p",
        "ecb_pref_equal.p", "ecb_pref_national.p", "ecb_pref_european.p"}) {
    std::string text = read_file(std::string(IOL_PROBLEM_DIR) + "/" + name);

    // Deleting the logic specification loses the reasoning set-up.
    std::string without_spec = text;
    std::size_t at = without_spec.find("logic");
    REQUIRE(at != std::string::npos);
    std::size_t start = without_spec.rfind("tff", at);
    std::size_t stop = without_spec.find(").", at);
    without_spec.erase(start, stop + 2 - start);
    CHECK_THROWS_AS(tptp::parse_problem(without_spec, name),
                    tptp::ParseError);

    // Corrupting a connective breaks the formula grammar.
    for (const auto& [from, to] : std::initializer_list<
             std::pair<std::string, std::string>>{
             {"=>", "="}, {"<=>", "<>"}, {"&", "&&"}, {"~", "!"}}) {
      std::size_t pos = text.find(from);
      if (pos == std::string::npos) continue;
      std::string corrupted = text;
      corrupted.replace(pos, from.size(), to);
      CHECK_THROWS_AS(tptp::parse_problem(corrupted, name),
                      tptp::ParseError);
    }
  }
}

TEST_CASE("constraints and preference are ignored without a constrained mode") {
  std::string text = R"(
tff(s, logic, $$iol == [ $$operator == $$out1,
                         $$constraints == [p],
                         $$preference == [n1] ]).
tff(n1, axiom, {$$norm} @ (p, q)).
)";
  tptp::Problem p = tptp::parse_problem(text, "w.p");
  CHECK(p.warnings.size() == 2);
  CHECK(p.spec.constraints.formulas.empty());
  CHECK(p.spec.preference.empty());
}

TEST_CASE("printing and reparsing is the identity on formula trees") {
  std::mt19937 rng(61);
  AtomTable atoms;
  for (const char* name : {"p", "q", "r", "s"}) atoms.intern(name);
  for (int round = 0; round < 300; ++round) {
    Formula f = support::random_formula(rng, 4, 3);
    std::string printed = to_string(f, atoms);
    AtomTable fresh;
    for (const char* name : {"p", "q", "r", "s"}) fresh.intern(name);
    Formula reparsed = tptp::parse_formula_text(printed, fresh);
    CHECK(reparsed == f);
    CHECK(to_string(reparsed, fresh) == printed);
  }
}

TEST_CASE("szs writer layouts") {
  tptp::Problem p = tptp::parse_problem(kParkingText, "parking.p");
  szs::Outcome outcome;
  outcome.basis.insert(Formula::disjunction(
      p.norms[1].body, p.norms[2].body));  // ticket | fine
  outcome.basis.insert(p.norms[1].head);   // pay
  outcome.basis_consistent = true;
  std::ostringstream out;
  szs::write_results(out, p, outcome);
  CHECK(out.str() ==
        "% SZS status Success for parking.p\n"
        "% SZS output start ListOfFormulae for parking.p\n"
        "ticket | fine\n"
        "pay\n"
        "% SZS output end ListOfFormulae for parking.p\n");

  szs::Outcome falsum;
  falsum.basis.insert(p.norms[0].body);
  falsum.basis_consistent = false;
  std::ostringstream out2;
  szs::write_results(out2, p, falsum);
  CHECK(out2.str() ==
        "% SZS status Success for parking.p\n"
        "% SZS output start ListOfFormulae for parking.p\n"
        "$false\n"
        "% SZS output end ListOfFormulae for parking.p\n");

  tptp::Problem c = tptp::parse_problem(kContraryToDutyText, "chisholm.p");
  szs::Outcome statuses;
  statuses.conjectures = {szs::ConjectureStatus::theorem,
                          szs::ConjectureStatus::counter_satisfiable};
  std::ostringstream out3;
  szs::write_results(out3, c, statuses);
  CHECK(out3.str() ==
        "% SZS status Theorem for chisholm.p: conjecturedOutput1\n"
        "% SZS status CounterSatisfiable for chisholm.p: conjecturedOutput1\n");
}

TEST_SUITE_END();
