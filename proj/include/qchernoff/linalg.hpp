#pragma once

#include <vector>

#include "qchernoff/complex_matrix.hpp"
#include "qchernoff/config.hpp"

namespace qchernoff {

// Full eigendecomposition via Householder tridiagonalization followed by
// implicit-shift QL. Deterministic and independent of thread count.
SpectralDecomposition eig_hermitian(const HermitianMatrix& h);

// Eigenvalues only (descending). Dispatches to a real-symmetric fast path
// when every entry has exactly zero imaginary part.
std::vector<double> eigvals_hermitian(const HermitianMatrix& h);

// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t cap = size_cap());

// n-fold Kronecker power, n >= 1.
ComplexMatrix tensor_power(const ComplexMatrix& a, int n,
                           std::size_t cap = size_cap());

// b^{(x)n} - a^{(x)n} assembled entrywise, so only the result is
// materialized. Entry (I,J) is prod_k b(i_k,j_k) - prod_k a(i_k,j_k) over the
// base-d digits of I and J.
HermitianMatrix tensor_power_diff(const HermitianMatrix& a,
                                  const HermitianMatrix& b, int n,
                                  std::size_t cap = size_cap());

// Sum of lambda_k |v_k><v_k| over eigenvalues above eps_rank * max|lambda|.
HermitianMatrix positive_part(const HermitianMatrix& h,
                              double eps_rank = kEpsRank);

// Orthogonal projection onto the strictly positive eigenspace.
HermitianMatrix support_projection(const HermitianMatrix& h,
                                   double eps_rank = kEpsRank);

// Eigenvalue map lambda -> lambda^s for PSD input and s in [0,1].
// Conventions: s = 0 gives the identity matrix (0^0 = 1), s = 1 returns the
// input, and 0^s = 0 for s in (0,1). Eigenvalues below -eps_rank * max|lambda|
// raise ValidationError.
HermitianMatrix frac_power(const HermitianMatrix& p, double s,
                           double eps_rank = kEpsRank);

// Sum of absolute eigenvalues.
double trace_norm(const HermitianMatrix& h);

}  // namespace qchernoff
