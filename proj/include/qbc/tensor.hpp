#pragma once

#include "qbc/matrix.hpp"
#include "qbc/state.hpp"
#include "qbc/tolerances.hpp"

namespace qbc {

/// Offset tables for a layout bipartition: every global amplitude index
/// decomposes uniquely as sel[i] + rest[t]. Joint indices on each side
/// follow layout order, leftmost most significant.
struct Bipartition {
  std::vector<std::size_t> sel;
  std::vector<std::size_t> rest;
};

Bipartition split_offsets(const SubsystemLayout& layout, PartySet selected);
Bipartition split_offsets(const SubsystemLayout& layout, const std::vector<bool>& selected);

/// Canonical form sum_i sigma_i |a_i> (x) |b_i> across a bipartite cut.
/// Coefficients are the singular values (nonincreasing); the squared
/// coefficients are the local reduced-density eigenvalues.
struct SchmidtForm {
  std::vector<double> coefficients;
  Operator alice_vectors;  // d_sel x r, orthonormal columns
  Operator bob_vectors;    // d_rest x r, orthonormal columns
  SubsystemLayout layout;
  PartySet split;

  StateVector reassemble() const;
};

StateVector tensor_product(const StateVector& a, const StateVector& b);
Operator tensor_product(const Operator& a, const Operator& b);

/// Reduced density matrix on the kept side. Throws std::invalid_argument
/// when the kept side or the traced side is empty.
DensityMatrix partial_trace(const StateVector& s, PartySet keep);
DensityMatrix partial_trace(const StateVector& s, const std::vector<bool>& keep);
/// Keep exactly the listed subsystem indices.
DensityMatrix partial_trace_subsystems(const StateVector& s,
                                       const std::vector<std::size_t>& keep);

/// Coefficient matrix M with |psi> = sum_ij M[i,j] |i>_sel |j>_rest.
/// Bit-exact and invertible via state_from_matrix.
Operator reshape_to_matrix(const StateVector& s, PartySet row_side = alice_side());
StateVector state_from_matrix(const Operator& m, const SubsystemLayout& layout,
                              PartySet row_side = alice_side());

/// Throws std::invalid_argument when the input is not normalized within
/// tol::structural.
SchmidtForm schmidt_decompose(const StateVector& s, PartySet alice = alice_side());

/// Unitary factor W = X Y^dagger of the SVD C = X S Y^dagger. Among all
/// unitaries W maximizes Re tr(W^dagger C). Defined for every square C
/// including rank-deficient and zero input, where the completion follows
/// the backend SVD's deterministic basis ordering.
Operator polar_unitary_factor(const Operator& c);

/// (1/2) sum |eigenvalues(r0 - r1)|, clamped to [0, 1]. Arguments are
/// ordered canonically before subtraction so the result is symmetric to
/// the last bit.
double trace_distance(const DensityMatrix& r0, const DensityMatrix& r1);

/// |<a|b>|, insensitive to global phase. Requires equal total dimension.
double overlap_up_to_phase(const StateVector& a, const StateVector& b);

/// max-norm(U^dagger U - I) <= tol
bool is_unitary(const Operator& u, double tol = tol::structural);

/// Full-space matrix-vector application; U must be dim x dim.
StateVector apply_full(const Operator& u, const StateVector& s);

/// Applies U on the joint space of the subsystems owned by `acting`,
/// identity elsewhere. U must be square of the matching dimension.
StateVector apply_on(const Operator& u, const StateVector& s, PartySet acting);

}  // namespace qbc
