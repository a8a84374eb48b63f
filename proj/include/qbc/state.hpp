#pragma once

#include "qbc/types.hpp"

namespace qbc {

/// Pure state over a structured multi-subsystem Hilbert space.
/// Immutable by convention after construction; all operations on states
/// are pure functions returning new values.
struct StateVector {
  std::vector<cplx> amp;
  SubsystemLayout layout;

  std::size_t dim() const { return amp.size(); }
  double squared_norm() const;
  double norm() const;
  /// In-place normalization; throws std::invalid_argument on the zero vector.
  StateVector& normalize();

  static StateVector zero(SubsystemLayout l);
  static StateVector basis_state(SubsystemLayout l, std::size_t index);
};

/// <a|b>; requires equal total dimension.
cplx inner_product(const StateVector& a, const StateVector& b);

}  // namespace qbc
