#include "qchernoff/complex_matrix.hpp"

#include <cmath>

namespace qchernoff {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::is_finite() const noexcept {
    for (const cplx& z : a_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

bool ComplexMatrix::is_real(double tol) const noexcept {
    for (const cplx& z : a_) {
        if (std::abs(z.imag()) > tol) return false;
    }
    return true;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    const int n = rows_ < cols_ ? rows_ : cols_;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionError("matrix sum: shape mismatch");
    }
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionError("matrix difference: shape mismatch");
    }
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx z) {
    for (cplx& v : a_) v *= z;
    return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions disagree");
    }
    const int n = a.rows(), k = a.cols(), m = b.cols();
    ComplexMatrix c(n, m);
#pragma omp parallel for schedule(static) if (n >= 32)
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < k; ++l) {
            const cplx ail = a(i, l);
            if (ail == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < m; ++j) {
                c(i, j) += ail * b(l, j);
            }
        }
    }
    return c;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square()) {
        throw DimensionError("Hermitian matrix must be square");
    }
    if (!mat_.is_finite()) {
        throw ValidationError("Hermitian matrix has non-finite entries");
    }
    const int n = mat_.rows();
    for (int i = 0; i < n; ++i) {
        mat_(i, i) = cplx(mat_(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
            mat_(i, j) = v;
            mat_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix HermitianMatrix::zero(int dim) {
    return HermitianMatrix(ComplexMatrix(dim, dim));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    return HermitianMatrix(ComplexMatrix::identity(dim));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const int n = eigenvectors.rows();
    ComplexMatrix r(n, n);
    for (int k = 0; k < static_cast<int>(eigenvalues.size()); ++k) {
        const double lam = eigenvalues[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) {
            const cplx vik = eigenvectors(i, k);
            for (int j = 0; j < n; ++j) {
                r(i, j) += lam * vik * std::conj(eigenvectors(j, k));
            }
        }
    }
    return r;
}

}  // namespace qchernoff
