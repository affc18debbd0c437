#include "iol/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "iol/constrained.hpp"
#include "iol/detachment.hpp"
#include "iol/entailment.hpp"
#include "iol/sat.hpp"
#include "iol/szs.hpp"
#include "iol/tptp.hpp"

namespace iol {

namespace {

std::string basename_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

FormulaSet compute_basis(const tptp::Problem& problem, const Context& ctx) {
  const tptp::LogicSpec& spec = problem.spec;
  if (!spec.constrained)
    return basis_for(spec.op, problem.norms, problem.input, ctx);
  const FormulaSet& constraints = spec.constraints.resolve(problem.input);
  MaxFamily family =
      maxfamily(spec.op, problem.norms, problem.input, constraints, ctx);
  MaxFamily preferred = pref_family(spec.preference, family);
  std::vector<FormulaSet> bases;
  bases.reserve(preferred.size());
  for (const NormSet& member : preferred)
    bases.push_back(basis_for(spec.op, member, problem.input, ctx));
  return aggregate(*spec.constrained, bases);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string source = basename_of(config.input_path);
  if (config.timeout_seconds && *config.timeout_seconds <= 0) {
    err << "% SZS status InputError for " << source << "\n";
    err << "% timeout must be positive\n";
    return 2;
  }

  std::ifstream file(config.input_path);
  if (!file) {
    err << "% SZS status InputError for " << source << "\n";
    err << "% cannot read '" << config.input_path << "'\n";
    return 2;
  }
  std::ostringstream text;
  text << file.rdbuf();

  tptp::Problem problem;
  try {
    problem = tptp::parse_problem(text.str(), source);
  } catch (const tptp::ParseError& e) {
    err << "% SZS status InputError for " << source << "\n";
    err << "% " << e.what() << "\n";
    return 2;
  }
  for (const std::string& w : problem.warnings)
    err << "% Warning: " << w << "\n";

  Context ctx;
  if (config.timeout_seconds) {
    ctx.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*config.timeout_seconds));
  }
  if (config.external_solver)
    ctx.solver = std::make_shared<sat::ExternalDimacsSolver>(*config.external_solver);

  szs::Outcome outcome;
  outcome.print_basis_with_conjectures = config.print_basis;
  try {
    outcome.basis = compute_basis(problem, ctx);
    outcome.basis_consistent = is_consistent(outcome.basis, ctx);
    for (const auto& [name, formula] : problem.conjectures) {
      outcome.conjectures.push_back(entails(outcome.basis, formula, ctx)
                                        ? szs::ConjectureStatus::theorem
                                        : szs::ConjectureStatus::counter_satisfiable);
    }
  } catch (const TimeoutError&) {
    err << "% SZS status Timeout for " << source << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "% SZS status Error for " << source << "\n";
    err << "% " << e.what() << "\n";
    return 2;
  }

  szs::write_results(out, problem, outcome);
  bool any_counter = false;
  for (szs::ConjectureStatus s : outcome.conjectures)
    any_counter |= s == szs::ConjectureStatus::counter_satisfiable;
  return any_counter ? 1 : 0;
}

}  // namespace iol
