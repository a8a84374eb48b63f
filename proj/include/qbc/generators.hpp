#pragma once

#include <optional>

#include "qbc/protocol.hpp"
#include "qbc/rng.hpp"

namespace qbc {

/// Haar-distributed unitary: modified Gram-Schmidt orthonormalization of a
/// matrix of standard complex gaussians. MGS normalizes with positive real
/// norms, which fixes the triangular factor's phases.
Operator haar_unitary(std::size_t d, SeededRng& rng);

/// Uniform point on the probability simplex (normalized exponentials).
std::vector<double> random_distribution(std::size_t n, SeededRng& rng);

/// Instance that is exactly concealing for every omega by construction:
/// U^(1) = (G (x) I_B) U^(0) with G a Haar Alice-local unitary, so the two
/// commitments differ by an Alice-local rotation that commutes with every
/// Bob-local branch. G is recorded in meta as the known-answer attack.
/// n_omegas defaults to n_branches (and collapses to 1 when n_branches is 1).
ProtocolInstance random_concealing_instance(std::uint64_t seed, std::size_t d_a, std::size_t d_b,
                                            std::size_t n_branches, std::size_t n_omegas = 0);

/// Negative control: product-state commitments whose Bob reductions are
/// orthogonal pure states (trace distance exactly 1).
ProtocolInstance random_nonconcealing_instance(std::uint64_t seed, std::size_t d_a,
                                               std::size_t d_b);

/// Known-answer attack recorded by the concealing generator, if present.
std::optional<Operator> known_attack(const ProtocolInstance& inst);

}  // namespace qbc
