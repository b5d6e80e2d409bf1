#include "qchernoff/reference.hpp"

#include <cmath>
#include <limits>

#include "qchernoff/linalg.hpp"

namespace qchernoff {
namespace detail {
void sort_descending_and_fix_phases(std::vector<double>& vals, ComplexMatrix* vecs);
}

namespace reference {

SpectralDecomposition eig_hermitian_jacobi(const HermitianMatrix& h) {
    const int n = h.dim();
    const std::size_t ns = static_cast<std::size_t>(n);
    std::vector<cplx> a = h.matrix().data();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double thresh = 1e-12 * h.frobenius_norm();
    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) s += std::norm(a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(j)]);
        }
        return std::sqrt(2.0 * s);
    };

    double off = off_norm();
    int sweep = 0;
    while (off > thresh) {
        if (sweep++ == 100) {
            throw NumericalError("Jacobi sweeps exhausted before convergence", off);
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a[static_cast<std::size_t>(p) * ns + static_cast<std::size_t>(q)];
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * ns + static_cast<std::size_t>(p)].real();
                const double aqq = a[static_cast<std::size_t>(q) * ns + static_cast<std::size_t>(q)].real();
                const cplx w = apq / r;
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sw = s * w;
                const cplx swc = s * std::conj(w);

                // columns: col_p' = c col_p - s w~ col_q, col_q' = s col_p + c w~ col_q
                for (int i = 0; i < n; ++i) {
                    cplx& aip = a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(p)];
                    cplx& aiq = a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(q)];
                    const cplx xp = aip, xq = aiq;
                    aip = c * xp - swc * xq;
                    aiq = s * xp + c * std::conj(w) * xq;
                }
                // rows: row_p' = c row_p - s w row_q, row_q' = s row_p + c w row_q
                for (int j = 0; j < n; ++j) {
                    cplx& apj = a[static_cast<std::size_t>(p) * ns + static_cast<std::size_t>(j)];
                    cplx& aqj = a[static_cast<std::size_t>(q) * ns + static_cast<std::size_t>(j)];
                    const cplx xp = apj, xq = aqj;
                    apj = c * xp - sw * xq;
                    aqj = s * xp + c * w * xq;
                }
                a[static_cast<std::size_t>(p) * ns + static_cast<std::size_t>(q)] = cplx(0.0, 0.0);
                a[static_cast<std::size_t>(q) * ns + static_cast<std::size_t>(p)] = cplx(0.0, 0.0);
                a[static_cast<std::size_t>(p) * ns + static_cast<std::size_t>(p)] =
                    cplx(a[static_cast<std::size_t>(p) * ns + static_cast<std::size_t>(p)].real(), 0.0);
                a[static_cast<std::size_t>(q) * ns + static_cast<std::size_t>(q)] =
                    cplx(a[static_cast<std::size_t>(q) * ns + static_cast<std::size_t>(q)].real(), 0.0);

                for (int i = 0; i < n; ++i) {
                    const cplx xp = v(i, p), xq = v(i, q);
                    v(i, p) = c * xp - swc * xq;
                    v(i, q) = s * xp + c * std::conj(w) * xq;
                }
            }
        }
        off = off_norm();
    }

    std::vector<double> vals(ns);
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(i)].real();
    detail::sort_descending_and_fix_phases(vals, &v);
    return SpectralDecomposition{std::move(vals), std::move(v)};
}

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions disagree");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const cplx ail = a(i, l);
            for (int j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    }
    return c;
}

ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1) {
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const cplx aij = a(i1, j1);
            for (int i2 = 0; i2 < b.rows(); ++i2) {
                for (int j2 = 0; j2 < b.cols(); ++j2) {
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
                }
            }
        }
    }
    return out;
}

HermitianMatrix tensor_power_diff_serial(const HermitianMatrix& a,
                                         const HermitianMatrix& b, int n) {
    ComplexMatrix ta = a.matrix();
    ComplexMatrix tb = b.matrix();
    for (int k = 1; k < n; ++k) {
        ta = kron_serial(ta, a.matrix());
        tb = kron_serial(tb, b.matrix());
    }
    return HermitianMatrix(tb - ta);
}

double product_min_error_serial(const std::vector<double>& p0,
                                const std::vector<double>& p1, int n,
                                double w0, double w1) {
    const int m = static_cast<int>(p0.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> lp0(p0.size()), lp1(p1.size());
    for (std::size_t x = 0; x < p0.size(); ++x) {
        lp0[x] = p0[x] > 0.0 ? std::log(p0[x]) : -inf;
        lp1[x] = p1[x] > 0.0 ? std::log(p1[x]) : -inf;
    }
    const double lw0 = w0 > 0.0 ? std::log(w0) : -inf;
    const double lw1 = w1 > 0.0 ? std::log(w1) : -inf;
    double total = 0.0;
    // lexicographic enumeration of count vectors summing to n
    auto rec = [&](auto&& self, int pos, int left, double logw, double l0, double l1) -> void {
        if (pos == m - 1) {
            const int k = left;
            const double lw = logw - std::lgamma(static_cast<double>(k) + 1.0);
            const double a = l0 + (k > 0 ? k * lp0[static_cast<std::size_t>(pos)] : 0.0);
            const double b = l1 + (k > 0 ? k * lp1[static_cast<std::size_t>(pos)] : 0.0);
            const double t = std::min(lw0 + a, lw1 + b);
            if (t != -inf) total += std::exp(lw + t);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            self(self, pos + 1, left - k,
                 logw - std::lgamma(static_cast<double>(k) + 1.0),
                 l0 + (k > 0 ? k * lp0[static_cast<std::size_t>(pos)] : 0.0),
                 l1 + (k > 0 ? k * lp1[static_cast<std::size_t>(pos)] : 0.0));
        }
    };
    if (m == 1) {
        const double a = n * lp0[0];
        const double b = n * lp1[0];
        const double t = std::min(lw0 + a, lw1 + b);
        return t == -inf ? 0.0 : std::exp(t);
    }
    rec(rec, 0, n, std::lgamma(static_cast<double>(n) + 1.0), 0.0, 0.0);
    return total;
}

}  // namespace reference
}  // namespace qchernoff
