#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>

namespace iol {

namespace sat {
class SolverBackend;
}

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("reasoning deadline exceeded") {}
};

/// Shared query environment: which SAT backend answers satisfiability calls
/// (null means the built-in kernel) and an optional wall-clock deadline.
/// A default-constructed Context is the normal case.
struct Context {
  std::shared_ptr<sat::SolverBackend> solver;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() >= *deadline)
      throw TimeoutError();
  }
};

}  // namespace iol
