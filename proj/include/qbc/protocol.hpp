#pragma once

#include <array>
#include <optional>

#include <json.hpp>

#include "qbc/matrix.hpp"
#include "qbc/state.hpp"
#include "qbc/tensor.hpp"

namespace qbc {

/// End-of-commitment description of a protocol: the shared initial state,
/// one global commitment unitary per bit value, and Bob's local branch
/// unitaries (stored Bob-local, identity-padded when applied).
struct ProtocolSpec {
  SubsystemLayout layout;
  StateVector initial_state;
  std::array<Operator, 2> commit_unitaries;
  std::vector<Operator> bob_branches;

  std::size_t alice_dim() const { return layout.dim_of(alice_side()); }
  std::size_t bob_dim() const { return layout.dim_of(PartySet(Party::Bob)); }
  std::size_t total_dim() const { return layout.total_dim(); }
};

/// Bob's secret parameter space: candidate distributions omega_i = {q_ik}
/// over the branch index, plus the meta-distribution pi = {p_i} over the
/// omega index.
struct DistributionFamily {
  std::vector<std::vector<double>> branch_dists;  // branch_dists[i][k] = q_ik
  std::vector<double> meta_dist;                  // meta_dist[i] = p_i

  std::size_t omega_count() const { return branch_dists.size(); }
  std::size_t branch_count() const {
    return branch_dists.empty() ? 0 : branch_dists.front().size();
  }
};

/// Monte-Carlo scenario parameters carried in the spec file.
struct CorollaryStanza {
  std::vector<double> target;
  std::size_t n_qubits = 0;
  double check_fraction = 0.5;
};

/// One spec file carries everything; subcommands ignore stanzas they do
/// not need. `meta` is free-form (generated instances record their
/// generator arguments and known-answer attack there).
struct ProtocolInstance {
  ProtocolSpec spec;
  DistributionFamily family;
  std::optional<CorollaryStanza> corollary;
  nlohmann::json meta = nlohmann::json::object();
};

struct Violation {
  std::string path;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks every invariant and reports all violations, not just the first.
ValidationReport validate(const ProtocolSpec& spec, const DistributionFamily& family);
ValidationReport validate(const ProtocolInstance& inst);

/// |Psi^(b)(omega_i)> = sum_k sqrt(q_ik) V_k U^(b) |phi> (x) |xi_k>, with
/// the xi register a fresh rightmost Bob-ancilla subsystem of dimension
/// branch_count. Throws std::out_of_range for a bad omega index.
StateVector commit_state(const ProtocolInstance& inst, int bit, std::size_t omega_index);
StateVector commit_state(const ProtocolSpec& spec, const DistributionFamily& family, int bit,
                         std::size_t omega_index);

}  // namespace qbc
