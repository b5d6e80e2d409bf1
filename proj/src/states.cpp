#include "qchernoff/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchernoff/rng.hpp"

namespace qchernoff {

DensityMatrix validate_density(const HermitianMatrix& m) {
    const SpectralDecomposition dec = eig_hermitian(m);
    double tr = 0.0;
    double min_lam = 0.0;
    for (double lam : dec.eigenvalues) {
        tr += lam;
        min_lam = std::min(min_lam, lam);
    }
    if (min_lam < -1e-8) {
        throw ValidationError("density matrix has negative eigenvalue " +
                              std::to_string(min_lam));
    }
    if (std::abs(tr - 1.0) > 1e-6) {
        throw ValidationError("density matrix trace " + std::to_string(tr) +
                              " is not 1");
    }

    bool clean = std::abs(tr - 1.0) <= 1e-12;
    for (double lam : dec.eigenvalues) {
        if (lam < 0.0 || lam > 1.0) clean = false;
    }
    if (clean) {
        return DensityMatrix(m);
    }

    std::vector<double> clipped(dec.eigenvalues.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < clipped.size(); ++k) {
        clipped[k] = std::clamp(dec.eigenvalues[k], 0.0, 1.0);
        sum += clipped[k];
    }
    const int n = m.dim();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = clipped[static_cast<std::size_t>(k)] / sum;
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const cplx vik = dec.eigenvectors(i, k);
            for (int j = 0; j < n; ++j) {
                out(i, j) += lam * vik * std::conj(dec.eigenvectors(j, k));
            }
        }
    }
    return DensityMatrix(HermitianMatrix(std::move(out)));
}

namespace {

// modified Gram-Schmidt with one re-orthogonalization pass
ComplexMatrix orthonormalize(ComplexMatrix g) {
    const int n = g.rows();
    for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < n; ++k) {
            for (int p = 0; p < k; ++p) {
                cplx dot(0.0, 0.0);
                for (int i = 0; i < n; ++i) dot += std::conj(g(i, p)) * g(i, k);
                for (int i = 0; i < n; ++i) g(i, k) -= dot * g(i, p);
            }
            double nrm = 0.0;
            for (int i = 0; i < n; ++i) nrm += std::norm(g(i, k));
            nrm = std::sqrt(nrm);
            for (int i = 0; i < n; ++i) g(i, k) /= nrm;
        }
    }
    return g;
}

}  // namespace

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    }
    return orthonormalize(std::move(g));
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
    if (rank < 1 || rank > d) {
        throw ValidationError("random_density: rank must lie in [1, d]");
    }
    Rng rng(seed);
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    }
    const ComplexMatrix u = orthonormalize(std::move(g));

    // flat simplex sample on `rank` coordinates
    std::vector<double> lam(static_cast<std::size_t>(rank));
    double sum = 0.0;
    for (double& x : lam) {
        x = -std::log(rng.uniform());
        sum += x;
    }
    for (double& x : lam) x /= sum;

    ComplexMatrix out(d, d);
    for (int k = 0; k < rank; ++k) {
        const double w = lam[static_cast<std::size_t>(k)];
        for (int i = 0; i < d; ++i) {
            const cplx uik = u(i, k);
            for (int j = 0; j < d; ++j) {
                out(i, j) += w * uik * std::conj(u(j, k));
            }
        }
    }
    return validate_density(HermitianMatrix(std::move(out)));
}

StatePair::StatePair(DensityMatrix rho0, DensityMatrix rho1)
    : rho0_(std::move(rho0)), rho1_(std::move(rho1)) {
    if (rho0_.dim() != rho1_.dim()) {
        throw DimensionError("state pair: dimensions differ");
    }
    dec0_ = eig_hermitian(rho0_.matrix());
    dec1_ = eig_hermitian(rho1_.matrix());
}

bool commutes(const StatePair& pair, double eps_comm) {
    const ComplexMatrix& a = pair.rho0().matrix().matrix();
    const ComplexMatrix& b = pair.rho1().matrix().matrix();
    const ComplexMatrix comm = matmul(a, b) - matmul(b, a);
    return comm.frobenius_norm() <= eps_comm;
}

}  // namespace qchernoff
