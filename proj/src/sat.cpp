#include "iol/sat.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>
#include <unistd.h>

namespace iol::sat {

void ClauseSet::set_num_variables(int n) {
  num_variables_ = std::max(num_variables_, n);
}

int ClauseSet::fresh_variable() { return ++num_variables_; }

bool ClauseSet::add_clause(std::vector<Literal> literals,
                           std::optional<GroupId> group) {
  for (std::size_t i = 0; i < literals.size(); ++i) {
    for (std::size_t j = i + 1; j < literals.size(); ++j) {
      if (literals[i].var == literals[j].var &&
          literals[i].positive != literals[j].positive)
        return false;  // tautologous
    }
    num_variables_ = std::max(num_variables_, literals[i].var);
  }
  clauses_.push_back(Clause{std::move(literals), group});
  return true;
}

namespace {

// Encoded literal: 2*var for positive, 2*var+1 for negative.
int encode(Literal l) { return l.var * 2 + (l.positive ? 0 : 1); }
int negate(int e) { return e ^ 1; }
int var_of(int e) { return e >> 1; }

// Unit-propagating backtracking search with two watched literals per clause.
// Branching is fixed (lowest unassigned variable, positive phase first) so
// identical inputs produce identical models.
class Kernel {
 public:
  Kernel(const ClauseSet& cs, const Context& ctx) : ctx_(ctx) {
    num_vars_ = cs.num_variables();
    assign_.assign(static_cast<std::size_t>(num_vars_) + 1, 0);
    watches_.assign(2 * (static_cast<std::size_t>(num_vars_) + 1), {});
    for (const Clause& c : cs.clauses()) {
      std::vector<int> lits;
      lits.reserve(c.literals.size());
      for (Literal l : c.literals) lits.push_back(encode(l));
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      if (lits.empty()) {
        empty_clause_ = true;
      } else if (lits.size() == 1) {
        initial_units_.push_back(lits[0]);
      } else {
        std::size_t ci = clauses_.size();
        clauses_.push_back(std::move(lits));
        watches_[clauses_[ci][0]].push_back(ci);
        watches_[clauses_[ci][1]].push_back(ci);
      }
    }
  }

  SatResult run() {
    if (empty_clause_) return {false, {}};
    for (int u : initial_units_) {
      if (!enqueue(u)) return {false, {}};
    }
    if (!propagate()) return {false, {}};
    while (true) {
      int v = next_unassigned();
      if (v == 0) return model();
      decisions_.push_back({v, trail_.size(), false});
      bool ok = enqueue(v * 2) && propagate();
      while (!ok) {
        if (!backtrack()) return {false, {}};
        ok = propagate();
      }
    }
  }

 private:
  struct Decision {
    int var;
    std::size_t trail_size;  // before the decision literal
    bool flipped;
  };

  int value(int e) const {
    int a = assign_[var_of(e)];
    if (a == 0) return 0;
    return (e & 1) == 0 ? a : -a;
  }

  bool enqueue(int e) {
    int v = var_of(e);
    int want = (e & 1) == 0 ? 1 : -1;
    if (assign_[v] == want) return true;
    if (assign_[v] == -want) return false;
    assign_[v] = want;
    trail_.push_back(e);
    return true;
  }

  // Propagates every trail literal not yet processed. Returns false on
  // conflict (the trail/queue state is left for backtrack() to unwind).
  bool propagate() {
    while (queue_head_ < trail_.size()) {
      ctx_.check_deadline();
      int falsified = negate(trail_[queue_head_++]);
      std::vector<std::size_t>& wl = watches_[falsified];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < wl.size(); ++i) {
        std::size_t ci = wl[i];
        std::vector<int>& cl = clauses_[ci];
        if (cl[0] == falsified) std::swap(cl[0], cl[1]);
        if (value(cl[0]) == 1) {
          wl[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < cl.size(); ++k) {
          if (value(cl[k]) != -1) {
            std::swap(cl[1], cl[k]);
            watches_[cl[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        wl[keep++] = ci;  // stays watched; clause is unit or conflicting
        if (!enqueue(cl[0])) {
          for (std::size_t j = i + 1; j < wl.size(); ++j) wl[keep++] = wl[j];
          wl.resize(keep);
          return false;
        }
      }
      wl.resize(keep);
    }
    return true;
  }

  // Undoes to the most recent decision still having an untried phase and
  // asserts the opposite phase there. Returns false when the tree is spent.
  bool backtrack() {
    while (!decisions_.empty()) {
      Decision d = decisions_.back();
      while (trail_.size() > d.trail_size) {
        assign_[var_of(trail_.back())] = 0;
        trail_.pop_back();
      }
      queue_head_ = trail_.size();
      decisions_.pop_back();
      if (!d.flipped) {
        decisions_.push_back({d.var, trail_.size(), true});
        enqueue(d.var * 2 + 1);
        return true;
      }
    }
    return false;
  }

  int next_unassigned() const {
    for (int v = 1; v <= num_vars_; ++v) {
      if (assign_[v] == 0) return v;
    }
    return 0;
  }

  SatResult model() const {
    SatResult r;
    r.satisfiable = true;
    r.model.assign(static_cast<std::size_t>(num_vars_) + 1, false);
    for (int v = 1; v <= num_vars_; ++v) r.model[v] = assign_[v] == 1;
    return r;
  }

  const Context& ctx_;
  int num_vars_ = 0;
  bool empty_clause_ = false;
  std::vector<int> initial_units_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<int> assign_;
  std::vector<int> trail_;
  std::size_t queue_head_ = 0;
  std::vector<Decision> decisions_;
};

Literal tseitin(const Formula& f, ClauseSet& cs, GroupId g);

Literal tseitin_binary(Kind kind, Literal a, Literal b, ClauseSet& cs,
                       GroupId g) {
  Literal v = pos(cs.fresh_variable());
  switch (kind) {
    case Kind::And:
      cs.add_clause({v.negated(), a}, g);
      cs.add_clause({v.negated(), b}, g);
      cs.add_clause({v, a.negated(), b.negated()}, g);
      break;
    case Kind::Or:
      cs.add_clause({v.negated(), a, b}, g);
      cs.add_clause({v, a.negated()}, g);
      cs.add_clause({v, b.negated()}, g);
      break;
    case Kind::Iff:
      cs.add_clause({v.negated(), a.negated(), b}, g);
      cs.add_clause({v.negated(), a, b.negated()}, g);
      cs.add_clause({v, a, b}, g);
      cs.add_clause({v, a.negated(), b.negated()}, g);
      break;
    default:
      throw std::logic_error("not a binary connective");
  }
  return v;
}

Literal tseitin(const Formula& f, ClauseSet& cs, GroupId g) {
  switch (f.kind()) {
    case Kind::Atom:
      return pos(static_cast<int>(f.atom_id()) + 1);
    case Kind::Top: {
      Literal v = pos(cs.fresh_variable());
      cs.add_clause({v}, g);
      return v;
    }
    case Kind::Bottom: {
      Literal v = pos(cs.fresh_variable());
      cs.add_clause({v.negated()}, g);
      return v;
    }
    case Kind::Not:
      return tseitin(f.child(), cs, g).negated();
    case Kind::And:
    case Kind::Or:
      return tseitin_binary(f.kind(), tseitin(f.left(), cs, g),
                            tseitin(f.right(), cs, g), cs, g);
    case Kind::Implies:
      return tseitin_binary(Kind::Or, tseitin(f.left(), cs, g).negated(),
                            tseitin(f.right(), cs, g), cs, g);
    case Kind::Iff:
      return tseitin_binary(Kind::Iff, tseitin(f.left(), cs, g),
                            tseitin(f.right(), cs, g), cs, g);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ClauseSet clausify(std::span<const std::pair<GroupId, Formula>> sources) {
  ClauseSet cs;
  AtomId bound = 0;
  for (const auto& [g, f] : sources) bound = std::max(bound, f.atom_bound());
  cs.set_num_variables(static_cast<int>(bound));
  for (const auto& [g, f] : sources) {
    Literal root = tseitin(f, cs, g);
    cs.add_clause({root}, g);
  }
  return cs;
}

ClauseSet clausify(const FormulaSet& sources) {
  std::vector<std::pair<GroupId, Formula>> pairs;
  pairs.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) pairs.emplace_back(i, sources[i]);
  return clausify(pairs);
}

SatResult solve(const ClauseSet& clauses, const Context& ctx) {
  ctx.check_deadline();
  if (!ctx.solver) return Kernel(clauses, ctx).run();
  SatResult r = ctx.solver->solve(clauses);
  // External answers are untrusted; a claimed model must actually satisfy
  // the clause set or callers relying on it (the MUS map loop) lose their
  // termination argument.
  if (r.satisfiable && !r.model.empty()) {
    for (const Clause& c : clauses.clauses()) {
      bool some = false;
      for (Literal l : c.literals)
        some = some ||
               (l.var < static_cast<int>(r.model.size()) &&
                r.model[l.var] == l.positive);
      if (!some)
        throw std::runtime_error(
            "external solver returned a model that violates the formula");
    }
  }
  return r;
}

std::string to_dimacs(const ClauseSet& clauses) {
  std::ostringstream os;
  os << "p cnf " << clauses.num_variables() << " " << clauses.size() << "\n";
  for (const Clause& c : clauses.clauses()) {
    for (Literal l : c.literals) os << (l.positive ? l.var : -l.var) << " ";
    os << "0\n";
  }
  return os.str();
}

SatResult ExternalDimacsSolver::solve(const ClauseSet& clauses) {
  char path[] = "/tmp/iol-query-XXXXXX";
  int fd = ::mkstemp(path);
  if (fd < 0) throw std::runtime_error("cannot create DIMACS temp file");
  std::string text = to_dimacs(clauses);
  if (::write(fd, text.data(), text.size()) !=
      static_cast<ssize_t>(text.size())) {
    ::close(fd);
    ::unlink(path);
    throw std::runtime_error("cannot write DIMACS temp file");
  }
  ::close(fd);

  std::string cmd = command_ + " " + path;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    ::unlink(path);
    throw std::runtime_error("cannot run external solver: " + command_);
  }
  std::string output;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), n);
  int status = ::pclose(pipe);
  ::unlink(path);

  std::optional<bool> verdict;
  std::vector<int> model_literals;
  bool saw_values = false;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) line = line.substr(2);
    if (line.rfind("SATISFIABLE", 0) == 0) {
      verdict = true;
    } else if (line.rfind("UNSATISFIABLE", 0) == 0) {
      verdict = false;
    } else if (line.rfind("v ", 0) == 0) {
      saw_values = true;
      std::istringstream vs(line.substr(2));
      int lit;
      while (vs >> lit) {
        if (lit != 0) model_literals.push_back(lit);
      }
    }
  }
  if (!verdict && WIFEXITED(status)) {
    int code = WEXITSTATUS(status);
    if (code == 10) verdict = true;
    if (code == 20) verdict = false;
  }
  if (!verdict)
    throw std::runtime_error("external solver gave no verdict: " + command_);

  SatResult r;
  r.satisfiable = *verdict;
  // Solvers that print no "v" lines answer the decision only; the model
  // stays empty so callers that need one can tell.
  if (r.satisfiable && saw_values) {
    r.model.assign(static_cast<std::size_t>(clauses.num_variables()) + 1,
                   false);
    for (int lit : model_literals) {
      int v = std::abs(lit);
      if (v <= clauses.num_variables()) r.model[v] = lit > 0;
    }
  }
  return r;
}

}  // namespace iol::sat
