#pragma once

#include <cstdint>

#include "qchernoff/complex_matrix.hpp"
#include "qchernoff/config.hpp"
#include "qchernoff/linalg.hpp"

namespace qchernoff {

// Positive unit-trace Hermitian matrix. Construct through validate_density or
// random_density.
class DensityMatrix {
public:
    int dim() const noexcept { return mat_.dim(); }
    const HermitianMatrix& matrix() const noexcept { return mat_; }

private:
    explicit DensityMatrix(HermitianMatrix m) : mat_(std::move(m)) {}
    friend DensityMatrix validate_density(const HermitianMatrix& m);
    HermitianMatrix mat_;
};

// Accepts a Hermitian matrix as a state when eigenvalue and trace violations
// stay within the repair band (eigenvalues >= -1e-8, |Tr - 1| <= 1e-6); the
// spectrum is then clipped to [0,1] and renormalized. Larger violations raise
// ValidationError naming the offending quantity.
DensityMatrix validate_density(const HermitianMatrix& m);

// Seeded random state: eigenbasis from orthonormalized complex Gaussians,
// `rank` eigenvalues from a flat simplex sample, zeros elsewhere.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

// Haar-ish deterministic unitary from QR of a seeded complex Gaussian matrix.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

// A hypothesis pair with cached spectral decompositions.
class StatePair {
public:
    StatePair(DensityMatrix rho0, DensityMatrix rho1);

    int dim() const noexcept { return rho0_.dim(); }
    const DensityMatrix& rho0() const noexcept { return rho0_; }
    const DensityMatrix& rho1() const noexcept { return rho1_; }
    const SpectralDecomposition& dec0() const noexcept { return dec0_; }
    const SpectralDecomposition& dec1() const noexcept { return dec1_; }

private:
    DensityMatrix rho0_;
    DensityMatrix rho1_;
    SpectralDecomposition dec0_;
    SpectralDecomposition dec1_;
};

// true iff the Frobenius norm of the commutator is within eps_comm
bool commutes(const StatePair& pair, double eps_comm = kEpsComm);

}  // namespace qchernoff
