#pragma once

#include <vector>

#include "qchernoff/complex_matrix.hpp"

namespace qchernoff::reference {

// Serial reference kernels. These are the plain, obviously-correct versions
// the tests and the benchmark compare the production kernels against.

// Cyclic complex Jacobi with row-cyclic sweep order. Converges when the
// off-diagonal Frobenius norm drops below 1e-12 * ||H||_F; throws
// NumericalError carrying the residual after 100 sweeps.
SpectralDecomposition eig_hermitian_jacobi(const HermitianMatrix& h);

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b);

// Straightforward tensor powers + subtraction, materializing both factors.
HermitianMatrix tensor_power_diff_serial(const HermitianMatrix& a,
                                         const HermitianMatrix& b, int n);

// Plain lexicographic type-class accumulation.
double product_min_error_serial(const std::vector<double>& p0,
                                const std::vector<double>& p1, int n,
                                double w0, double w1);

}  // namespace qchernoff::reference
