#pragma once

#include <span>

#include "qbc/protocol.hpp"

namespace qbc {

/// Setup for the distribution-check evasion run: Bob is told to act
/// per `target` but secretly mixes his own family with weights `mixing`
/// chosen so the effective distribution equals the target.
struct CorollaryScenario {
  std::vector<double> target;
  DistributionFamily family;
  std::vector<double> mixing;
  std::size_t n_qubits = 0;
  double check_fraction = 0.5;

  std::size_t checked_count() const;
  std::size_t kept_count() const { return n_qubits - checked_count(); }
};

struct MixingSolution {
  bool feasible = false;
  std::vector<double> weights;
  double residual = 0;  // max-abs component mismatch
};

/// Finds pi >= 0, sum 1, with sum_i p_i q_ik = target_k: nonnegative least
/// squares over the simplex (active-set elimination of negative weights
/// plus dual-feasibility re-adds, iterated to convergence). Infeasible when
/// the residual exceeds 1e-6.
MixingSolution solve_mixing_weights(std::span<const double> target,
                                    const DistributionFamily& family);

/// Builds the scenario from an instance's corollary stanza; throws
/// PreconditionError when the stanza is absent and InfeasibleTargetError
/// when no mixing weights exist.
CorollaryScenario make_scenario(const ProtocolInstance& inst);

struct SwitchStats {
  std::size_t checked_count = 0;
  std::size_t kept_count = 0;
  std::vector<double> empirical_check_dist;
  std::vector<std::size_t> realized_dists;  // omega index per kept qubit
  double all_target_probability = 0;
  bool frequency_check_passed = false;
  double max_check_deviation = 0;  // max_k |empirical_k - target_k|
};

/// Samples the checked qubits' action indices from the flattened effective
/// distribution and applies the 4-sigma per-component frequency test.
/// Returns the checked-phase half of the stats (realized_dists empty).
SwitchStats simulate_check_phase(const CorollaryScenario& sc, std::uint64_t seed);

/// Full run: check phase as above, then for every kept qubit measures the
/// chi register, i.e. samples the omega index from `mixing`. Each kept
/// qubit is governed by its realized omega_i from then on, not the target.
SwitchStats post_check_switch(const CorollaryScenario& sc, std::uint64_t seed);

/// (sum of mixing weights on family members exactly equal to the target)
/// raised to the kept-qubit count: the probability that every kept qubit
/// still realizes the target distribution.
double all_match_probability(const CorollaryScenario& sc);

}  // namespace qbc
