#pragma once

#include <cstddef>

#include "qbc/types.hpp"

namespace qbc::kernels {

// Dense inner loops, each in two variants: *_serial is the reference
// implementation, *_parallel the OpenMP one. The parallel variants split
// work over output elements only and keep the per-element summation order
// of the reference, so both variants agree to the last bit for a given
// build and results do not depend on the thread count.
//
// Scalar reductions (inner, sumsq) have a single serial implementation:
// an OpenMP reduction would reorder the sum and break reproducibility for
// an O(n) operation that is never the bottleneck.
//
// The unqualified entry points dispatch on active_backend() and a grain
// threshold.

enum class Backend { serial, parallel };

Backend active_backend();
void set_backend(Backend b);
/// Thread count the parallel variants will use (1 when built without OpenMP).
int max_threads();

// out[i*bn + j] = a[i] * b[j]
void kron_serial(const cplx* a, std::size_t an, const cplx* b, std::size_t bn, cplx* out);
void kron_parallel(const cplx* a, std::size_t an, const cplx* b, std::size_t bn, cplx* out);
void kron(const cplx* a, std::size_t an, const cplx* b, std::size_t bn, cplx* out);

// out is (ar*br) x (ac*bc); out[(i*br+k)*(ac*bc) + (j*bc+l)] = A[i,j] * B[k,l]
void kron_matrix_serial(const cplx* A, std::size_t ar, std::size_t ac, const cplx* B,
                        std::size_t br, std::size_t bc, cplx* out);
void kron_matrix_parallel(const cplx* A, std::size_t ar, std::size_t ac, const cplx* B,
                          std::size_t br, std::size_t bc, cplx* out);
void kron_matrix(const cplx* A, std::size_t ar, std::size_t ac, const cplx* B, std::size_t br,
                 std::size_t bc, cplx* out);

// C = A * B with A n x k, B k x m, all row-major. C must not alias A or B.
void matmul_serial(const cplx* A, const cplx* B, cplx* C, std::size_t n, std::size_t k,
                   std::size_t m);
void matmul_parallel(const cplx* A, const cplx* B, cplx* C, std::size_t n, std::size_t k,
                     std::size_t m);
void matmul(const cplx* A, const cplx* B, cplx* C, std::size_t n, std::size_t k, std::size_t m);

// Applies the m x m matrix U on the selected subsystems of a state:
//   out[sub[i] + env[t]] = sum_j U[i*m + j] * in[sub[j] + env[t]]
// where sub/env are the offset tables of a layout bipartition.
void apply_subspace_serial(const cplx* U, std::size_t m, const std::size_t* sub,
                           const std::size_t* env, std::size_t env_n, const cplx* in, cplx* out);
void apply_subspace_parallel(const cplx* U, std::size_t m, const std::size_t* sub,
                             const std::size_t* env, std::size_t env_n, const cplx* in, cplx* out);
void apply_subspace(const cplx* U, std::size_t m, const std::size_t* sub, const std::size_t* env,
                    std::size_t env_n, const cplx* in, cplx* out);

// rho[r*K + c] = sum_t psi[keep[r] + tr[t]] * conj(psi[keep[c] + tr[t]]).
// Only the upper triangle is summed; the lower is mirrored, so the result
// is Hermitian to the last bit.
void partial_trace_serial(const cplx* psi, const std::size_t* keep, std::size_t K,
                          const std::size_t* tr, std::size_t T, cplx* rho);
void partial_trace_parallel(const cplx* psi, const std::size_t* keep, std::size_t K,
                            const std::size_t* tr, std::size_t T, cplx* rho);
void partial_trace(const cplx* psi, const std::size_t* keep, std::size_t K, const std::size_t* tr,
                   std::size_t T, cplx* rho);

// sum_i conj(a[i]) * b[i]; always serial (see above).
cplx inner(const cplx* a, const cplx* b, std::size_t n);
// sum_i |a[i]|^2; always serial.
double sumsq(const cplx* a, std::size_t n);

}  // namespace qbc::kernels
