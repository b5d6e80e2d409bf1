#include "qchernoff/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qchernoff {

std::size_t size_cap() {
    static const std::size_t cap = [] {
        const char* env = std::getenv("QCHERNOFF_SIZE_CAP");
        if (env == nullptr || *env == '\0') return static_cast<std::size_t>(4096);
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) {
            throw ValidationError("QCHERNOFF_SIZE_CAP must be a positive integer");
        }
        return static_cast<std::size_t>(v);
    }();
    return cap;
}

namespace {

void check_cap(std::size_t rows, std::size_t cap) {
    if (rows > cap) {
        throw SizeCapError("dimension " + std::to_string(rows) +
                           " exceeds the size cap of " + std::to_string(cap) +
                           " rows (QCHERNOFF_SIZE_CAP overrides)");
    }
}

std::size_t checked_power(std::size_t base, int n, std::size_t cap) {
    std::size_t r = 1;
    for (int k = 0; k < n; ++k) {
        if (base != 0 && r > cap / base + 1) check_cap(cap + 1, cap);
        r *= base;
        check_cap(r, cap);
    }
    return r;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
    const std::size_t rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    const std::size_t cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
    check_cap(rows, cap);
    check_cap(cols, cap);
    ComplexMatrix out(static_cast<int>(rows), static_cast<int>(cols));
    const int br = b.rows(), bc = b.cols(), ac = a.cols();
#pragma omp parallel for schedule(static) if (rows >= 64)
    for (int r = 0; r < static_cast<int>(rows); ++r) {
        const int i1 = r / br;
        const int i2 = r % br;
        for (int j1 = 0; j1 < ac; ++j1) {
            const cplx aij = a(i1, j1);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int j2 = 0; j2 < bc; ++j2) {
                out(r, j1 * bc + j2) = aij * b(i2, j2);
            }
        }
    }
    return out;
}

ComplexMatrix tensor_power(const ComplexMatrix& a, int n, std::size_t cap) {
    if (n < 1) throw ValidationError("tensor power requires n >= 1");
    checked_power(static_cast<std::size_t>(a.rows()), n, cap);
    checked_power(static_cast<std::size_t>(a.cols()), n, cap);
    ComplexMatrix out = a;
    for (int k = 1; k < n; ++k) out = kron(out, a, cap);
    return out;
}

HermitianMatrix tensor_power_diff(const HermitianMatrix& a, const HermitianMatrix& b,
                                  int n, std::size_t cap) {
    if (a.dim() != b.dim()) throw DimensionError("tensor_power_diff: dimension mismatch");
    if (n < 1) throw ValidationError("tensor power requires n >= 1");
    const int d = a.dim();
    const std::size_t big = checked_power(static_cast<std::size_t>(d), n, cap);
    const int nn = static_cast<int>(big);
    ComplexMatrix out(nn, nn);
#pragma omp parallel for schedule(static) if (nn >= 64)
    for (int row = 0; row < nn; ++row) {
        std::vector<int> idig(static_cast<std::size_t>(n));
        std::vector<int> jdig(static_cast<std::size_t>(n), 0);
        int rest = row;
        for (int k = n - 1; k >= 0; --k) {
            idig[static_cast<std::size_t>(k)] = rest % d;
            rest /= d;
        }
        for (int col = 0; col < nn; ++col) {
            cplx pa(1.0, 0.0), pb(1.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const int ik = idig[static_cast<std::size_t>(k)];
                const int jk = jdig[static_cast<std::size_t>(k)];
                pa *= a(ik, jk);
                pb *= b(ik, jk);
            }
            out(row, col) = pb - pa;
            // increment jdig with carry, least significant digit last
            for (int k = n - 1; k >= 0; --k) {
                if (++jdig[static_cast<std::size_t>(k)] < d) break;
                jdig[static_cast<std::size_t>(k)] = 0;
            }
        }
    }
    return HermitianMatrix(std::move(out));
}

namespace {

HermitianMatrix rebuild_from_spectrum(const SpectralDecomposition& dec,
                                      const std::vector<double>& mapped) {
    const int n = dec.eigenvectors.rows();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = mapped[static_cast<std::size_t>(k)];
        if (lam == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const cplx vik = dec.eigenvectors(i, k);
            for (int j = 0; j < n; ++j) {
                out(i, j) += lam * vik * std::conj(dec.eigenvectors(j, k));
            }
        }
    }
    return HermitianMatrix(std::move(out));
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

HermitianMatrix positive_part(const HermitianMatrix& h, double eps_rank) {
    const SpectralDecomposition dec = eig_hermitian(h);
    const double tau = eps_rank * max_abs(dec.eigenvalues);
    std::vector<double> mapped(dec.eigenvalues.size(), 0.0);
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        if (dec.eigenvalues[k] > tau) mapped[k] = dec.eigenvalues[k];
    }
    return rebuild_from_spectrum(dec, mapped);
}

HermitianMatrix support_projection(const HermitianMatrix& h, double eps_rank) {
    const SpectralDecomposition dec = eig_hermitian(h);
    const double tau = eps_rank * max_abs(dec.eigenvalues);
    std::vector<double> mapped(dec.eigenvalues.size(), 0.0);
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        if (dec.eigenvalues[k] > tau) mapped[k] = 1.0;
    }
    return rebuild_from_spectrum(dec, mapped);
}

HermitianMatrix frac_power(const HermitianMatrix& p, double s, double eps_rank) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("fractional power exponent must lie in [0,1]");
    }
    if (s == 1.0) {
        // eigenvalue map is the identity; still reject non-PSD input
        const std::vector<double> vals = eigvals_hermitian(p);
        const double tau = eps_rank * max_abs(vals);
        for (double lam : vals) {
            if (lam < -tau) {
                throw ValidationError("fractional power of a non-PSD matrix (eigenvalue " +
                                      std::to_string(lam) + ")");
            }
        }
        return p;
    }
    const SpectralDecomposition dec = eig_hermitian(p);
    const double tau = eps_rank * max_abs(dec.eigenvalues);
    std::vector<double> mapped(dec.eigenvalues.size(), 0.0);
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        const double lam = dec.eigenvalues[k];
        if (lam < -tau) {
            throw ValidationError("fractional power of a non-PSD matrix (eigenvalue " +
                                  std::to_string(lam) + ")");
        }
        if (s == 0.0) {
            mapped[k] = 1.0;  // 0^0 = 1: P^0 is the identity
        } else {
            mapped[k] = lam <= tau ? 0.0 : std::pow(lam, s);
        }
    }
    return rebuild_from_spectrum(dec, mapped);
}

double trace_norm(const HermitianMatrix& h) {
    const std::vector<double> vals = eigvals_hermitian(h);
    double s = 0.0;
    for (double lam : vals) s += std::abs(lam);
    return s;
}

}  // namespace qchernoff
