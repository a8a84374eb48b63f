#pragma once

#include <optional>
#include <span>
#include <utility>

#include "qbc/protocol.hpp"

namespace qbc {

/// Superposition over Bob's candidate distributions: the chi register
/// (omega index) is the rightmost subsystem, appended after any xi
/// register already present, giving the layout [A | B | xi | chi].
struct PurifiedState {
  StateVector state;
  std::size_t branch_count = 1;  // xi register dimension (1 when absent)
  std::size_t omega_count = 0;   // chi register dimension

  std::size_t chi_subsystem() const { return state.layout.subsystems() - 1; }
};

/// sum_i sqrt(p_i) |branch_i> (x) |chi_i>. All branch states must share a
/// layout; pi must be a distribution over them.
PurifiedState purify_branches(std::span<const StateVector> branches,
                              std::span<const double> pi);

/// q'_k = sum_i p_i q_ik.
std::vector<double> effective_distribution(std::span<const double> pi,
                                           const std::vector<std::vector<double>>& omegas);

/// Single-effective-distribution form of a purified state. chi' vectors are
/// normalized but not necessarily orthogonal; indices with q'_k == 0 are
/// dropped (the defining expression divides by q'_k) and recorded.
struct FlattenedForm {
  std::vector<double> effective_dist;                   // q'_k, all k
  std::vector<std::vector<double>> chi_prime_vectors;   // kept k only, in k order
  std::vector<std::size_t> dropped;                     // k with q'_k == 0
  StateVector state;
  double identity_overlap = 0;
};

/// Rewrites the purified state as one effective distribution and verifies
/// the rewrite: the assembled state must overlap the purified one to
/// within 1e-12 (the rewrite is an algebraic identity). An overlap below
/// 1 - 1e-9 means the purified state was not built from (pi, omegas) over
/// this instance and raises ContractViolation.
FlattenedForm flatten(const PurifiedState& purified, std::span<const double> pi,
                      const std::vector<std::vector<double>>& omegas,
                      const ProtocolInstance& inst, int bit);

struct AncillaCollapse {
  double probability = 0;
  std::optional<StateVector> state;  // absent when probability == 0
};

/// Projects the chi register onto |i> and renormalizes; the returned
/// probability is the measured weight of that outcome.
AncillaCollapse collapse_ancilla(const PurifiedState& purified, std::size_t omega_index);

/// Samples the chi register (seeded) and collapses onto the outcome.
std::pair<std::size_t, StateVector> measure_ancilla(const PurifiedState& purified,
                                                    std::uint64_t seed);

}  // namespace qbc
