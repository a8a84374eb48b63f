#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbc {

/// Syntax or schema error while reading a protocol file. `position` is a
/// 0-based byte offset into the input; line/column are 1-based.
struct ParseError : std::runtime_error {
  std::size_t position = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  ParseError(std::string msg, std::size_t pos, std::size_t ln, std::size_t col)
      : std::runtime_error(std::move(msg)), position(pos), line(ln), column(col) {}
};

/// Refusal to build or run an attack on inputs whose Bob-side reductions
/// differ; carries the measured evidence.
struct NotConcealingError : std::runtime_error {
  double distance = 0;

  explicit NotConcealingError(double dist)
      : std::runtime_error("inputs are not concealing: Bob-side trace distance " +
                           std::to_string(dist)),
        distance(dist) {}
};

/// A caller violated a stated precondition (e.g. a zero meta-distribution
/// weight where full support is required).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An internal algebraic identity failed to hold; indicates a bug in the
/// caller's inputs or in this library, never mere numerical noise.
struct ContractViolation : std::logic_error {
  double overlap = 0;

  ContractViolation(const std::string& what, double ov)
      : std::logic_error(what), overlap(ov) {}
};

/// Requested target distribution lies outside the convex hull of the family.
struct InfeasibleTargetError : std::runtime_error {
  double residual = 0;

  explicit InfeasibleTargetError(double res)
      : std::runtime_error("target distribution is infeasible for this family (residual " +
                           std::to_string(res) + ")"),
        residual(res) {}
};

}  // namespace qbc
