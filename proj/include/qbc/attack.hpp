#pragma once

#include "qbc/errors.hpp"
#include "qbc/purification.hpp"

namespace qbc {

struct ConcealmentResult {
  bool concealing = false;
  double max_distance = 0;
  std::vector<double> per_omega_distance;
  double purified_distance = 0;
};

/// Bob-side (including his ancillas) trace distance between the two
/// commitments, for every omega_i and for the pi-purified pair; concealing
/// iff the maximum is within tol.
ConcealmentResult concealment_check(const ProtocolInstance& inst, double tol = tol::conceal);

/// Alice-local unitary with (U (x) I) |psi0> matching |psi1| up to global
/// phase: the polar unitary factor of M1 M0^dagger, where M_b are the
/// Alice-vs-rest coefficient matrices. Exact when the Bob reductions are
/// exactly equal; inputs whose reductions differ by more than tol are
/// refused with the measured distance. Off the Alice-side support of psi0
/// the returned unitary is an arbitrary deterministic completion, so all
/// guarantees are about its action on states, never matrix entries.
Operator build_cheating_unitary(const StateVector& psi0, const StateVector& psi1,
                                double tol = tol::conceal);

/// Same construction without the concealment gate (negative controls).
Operator cheating_unitary_unchecked(const StateVector& psi0, const StateVector& psi1);

/// overlap_up_to_phase((U (x) I) |psi0>, |psi1>).
double attack_overlap(const Operator& u_alice, const StateVector& psi0,
                      const StateVector& psi1);

/// Uhlmann fidelity tr|sqrt(rho0) sqrt(rho1)| of the Bob reductions: the
/// ceiling on any Alice-local attack overlap, equal to 1 exactly when the
/// instance is concealing.
double cheating_bound(const DensityMatrix& rho0, const DensityMatrix& rho1);

struct AttackReport {
  bool concealing = false;
  double max_trace_distance = 0;
  std::optional<Operator> cheating_unitary;  // present iff concealing
  double attack_overlap = 0;                 // purified-pair overlap
  std::vector<std::pair<std::size_t, double>> per_branch_overlaps;
  double fidelity_bound = 0;
  /// agreement[i][j]: overlap of branch i's own unitary acting on branch
  /// j's commitment pair; near 1 everywhere iff the attack is
  /// omega-independent in action.
  std::vector<std::vector<double>> branch_action_agreement;
};

/// The omega-independence certificate: builds the purified commitment pair
/// over the family's pi (all p_i must be nonzero), constructs the single
/// purified-level unitary, and checks its action on every branch pair.
/// Non-concealing instances yield a report with concealing == false and
/// the distance evidence; a zero p_i raises PreconditionError.
AttackReport verify_theorem1(const ProtocolInstance& inst, double tol_attack = tol::attack,
                             double tol_conceal = tol::conceal);

struct BranchVerification {
  std::size_t omega_index = 0;
  double overlap = 0;
};

struct AttackTranscript {
  int commit_bit = 0;
  int unveil_bit = 0;
  bool unitary_applied = false;
  bool forced = false;
  std::vector<BranchVerification> verification;  // one entry per omega
  double min_overlap = 0;
  Operator attack_unitary;
};

/// Simulates the sure-win strategy: commit to 0, then unveil `unveil_bit`,
/// applying the Alice-local unitary first when it differs from the
/// commitment. The unitary is computed from the purified pair over the
/// uniform meta-distribution — Alice needs no knowledge of Bob's secret
/// omega. Bob's verification observable is the overlap of the final joint
/// state with the honest commitment of `unveil_bit`, recorded per omega.
/// Non-concealing instances are refused unless force is set.
AttackTranscript epr_attack_run(const ProtocolInstance& inst, int unveil_bit,
                                double tol_conceal = tol::conceal, bool force = false);

/// Best overlap over `trials` Haar-sampled Alice unitaries; deterministic
/// per seed (trial t uses the derived stream t) and independent of thread
/// count. Used as the sampled lower-bound check against cheating_bound.
double best_sampled_attack_overlap(const StateVector& psi0, const StateVector& psi1,
                                   std::size_t trials, std::uint64_t seed);

}  // namespace qbc
