#pragma once

#include "qbc/matrix.hpp"

// Decomposition backend. The only part of the library that touches Eigen;
// everything else goes through these entry points so the test oracles can
// stay independent of them.

namespace qbc::linalg {

/// Thin SVD, M = u * diag(sigma) * v^dagger; sigma nonincreasing.
struct SvdResult {
  Operator u;                 // rows x r
  std::vector<double> sigma;  // r = min(rows, cols)
  Operator v;                 // cols x r
};

SvdResult svd(const Operator& m);

/// A = vectors * diag(values) * vectors^dagger for Hermitian A
/// (lower triangle is trusted). Values ascending.
struct EigResult {
  Operator vectors;  // d x d, columns are eigenvectors
  std::vector<double> values;
};

EigResult hermitian_eig(const cplx* a, std::size_t d);
std::vector<double> hermitian_eigenvalues(const cplx* a, std::size_t d);

/// PSD square root with negative eigenvalues clamped to zero.
DensityMatrix psd_sqrt(const DensityMatrix& rho);

/// Sum of singular values (trace norm).
double singular_value_sum(const Operator& m);

}  // namespace qbc::linalg
