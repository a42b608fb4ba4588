#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idcode {

enum class Precondition {
  vertex_out_of_range,
  loop_edge,
  disconnected,
  not_identifiable,
  has_triangle,
  max_degree_below_3,
  false_twins_present,
  isomorphic_to_c4,
  not_independent,
  not_subset,
  not_strong_matching,
  degree_not_two,
  false_twin_in_y,
  too_many_vertices,
  colouring_failed,
  invalid_family,
};

std::string_view describe(Precondition p);

// An input violated a documented precondition. `which()` tells the caller
// which one, so front-ends can map it to an exit status.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(Precondition which, const std::string& detail)
      : std::invalid_argument(std::string(describe(which)) + (detail.empty() ? "" : ": " + detail)),
        which_(which) {}
  explicit PreconditionError(Precondition which) : PreconditionError(which, "") {}

  Precondition which() const { return which_; }

 private:
  Precondition which_;
};

// A construction produced output that failed its own certificate. Seeing one
// of these means a bug or a counterexample, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace idcode
