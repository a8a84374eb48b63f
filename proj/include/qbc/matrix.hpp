#pragma once

#include "qbc/types.hpp"

namespace qbc {

/// Dense complex matrix, row-major. Covers unitaries, isometries and
/// coefficient matrices alike; rows is the codomain dimension, cols the
/// domain dimension.
struct Operator {
  std::vector<cplx> a;
  std::size_t rows = 0;
  std::size_t cols = 0;

  Operator() = default;
  Operator(std::size_t r, std::size_t c) : a(r * c), rows(r), cols(c) {}

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool square() const { return rows == cols; }
  Operator adjoint() const;

  static Operator identity(std::size_t n);
  static Operator zero(std::size_t r, std::size_t c);

  bool operator==(const Operator&) const = default;
};

/// Matrix product via the kernel layer.
Operator operator*(const Operator& lhs, const Operator& rhs);

/// Hermitian, unit-trace, PSD matrix (within tolerances checked by
/// validate(); construction does not pay for an eigensolve).
struct DensityMatrix {
  std::vector<cplx> a;
  std::size_t d = 0;

  DensityMatrix() = default;
  explicit DensityMatrix(std::size_t dim) : a(dim * dim), d(dim) {}

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * d + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * d + j]; }

  cplx trace() const;
  double hermiticity_error() const;  // max |a(i,j) - conj(a(j,i))|
};

DensityMatrix operator-(const DensityMatrix& lhs, const DensityMatrix& rhs);

}  // namespace qbc
