#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qchernoff/errors.hpp"

namespace qchernoff {

using cplx = std::complex<double>;

// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    cplx& operator()(int i, int j) noexcept { return a_[idx(i, j)]; }
    const cplx& operator()(int i, int j) const noexcept { return a_[idx(i, j)]; }

    std::vector<cplx>& data() noexcept { return a_; }
    const std::vector<cplx>& data() const noexcept { return a_; }

    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_finite() const noexcept;
    bool is_real(double tol = 0.0) const noexcept;

    cplx trace() const;
    double frobenius_norm() const;

    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx z);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(cplx z, ComplexMatrix a) {
        a *= z;
        return a;
    }

private:
    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

// c = a * b, parallel over rows of the result.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Self-adjoint matrix. Construction symmetrizes (m + m†)/2 and rejects
// non-square or non-finite input.
class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix m);

    static HermitianMatrix zero(int dim);
    static HermitianMatrix identity(int dim);

    int dim() const noexcept { return mat_.rows(); }
    const cplx& operator()(int i, int j) const noexcept { return mat_(i, j); }
    const ComplexMatrix& matrix() const noexcept { return mat_; }

    double frobenius_norm() const { return mat_.frobenius_norm(); }
    double trace_real() const { return mat_.trace().real(); }

private:
    ComplexMatrix mat_;
};

// Eigenvalues sorted descending; column k of eigenvectors pairs with
// eigenvalue k. Each column's phase is fixed so that its first component of
// nonnegligible magnitude is real positive.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

}  // namespace qchernoff
