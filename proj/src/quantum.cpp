#include "qchernoff/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qchernoff {

TestOperator::TestOperator(HermitianMatrix m, double eps_rank) : mat_(std::move(m)) {
    const std::vector<double> vals = eigvals_hermitian(mat_);
    for (double lam : vals) {
        if (lam < -eps_rank || lam > 1.0 + eps_rank) {
            throw ValidationError("test operator eigenvalue " + std::to_string(lam) +
                                  " outside [0,1]");
        }
    }
}

TestOperator TestOperator::unchecked(HermitianMatrix m) {
    return TestOperator(std::move(m), Unchecked{});
}

namespace {

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // Tr[a b] = sum_ij a_ij b_ji
    double t = 0.0;
    const int n = a.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t += (a(i, j) * b(j, i)).real();
        }
    }
    return t;
}

std::size_t checked_dim_pow(int d, int n) {
    std::size_t r = 1;
    const std::size_t cap = size_cap();
    for (int k = 0; k < n; ++k) {
        r *= static_cast<std::size_t>(d);
        if (r > cap) {
            throw SizeCapError("dimension " + std::to_string(d) + "^" +
                               std::to_string(n) + " exceeds the size cap of " +
                               std::to_string(cap) + " rows");
        }
    }
    return r;
}

}  // namespace

double bayes_error_quantum(const StatePair& pair, int n, const TestOperator& r) {
    if (n < 1) throw ValidationError("copy count must be >= 1");
    const std::size_t dim = checked_dim_pow(pair.dim(), n);
    if (static_cast<std::size_t>(r.dim()) != dim) {
        throw DimensionError("test operator dimension " + std::to_string(r.dim()) +
                             " does not match d^n = " + std::to_string(dim));
    }
    const ComplexMatrix t0 = tensor_power(pair.rho0().matrix().matrix(), n);
    const ComplexMatrix t1 = tensor_power(pair.rho1().matrix().matrix(), n);
    const double tr0 = real_trace_product(r.matrix().matrix(), t0);
    const double tr1 = real_trace_product(r.matrix().matrix(), t1);
    return 0.5 * tr0 + 0.5 * (1.0 - tr1);
}

TestOperator helstrom_test(const StatePair& pair, int n, double eps_rank) {
    if (n < 1) throw ValidationError("copy count must be >= 1");
    checked_dim_pow(pair.dim(), n);
    const HermitianMatrix diff =
        tensor_power_diff(pair.rho0().matrix(), pair.rho1().matrix(), n);
    return TestOperator::unchecked(support_projection(diff, eps_rank));
}

double min_error_exact(const StatePair& pair, int n) {
    if (n < 1) throw ValidationError("copy count must be >= 1");
    checked_dim_pow(pair.dim(), n);
    const HermitianMatrix diff =
        tensor_power_diff(pair.rho0().matrix(), pair.rho1().matrix(), n);
    return 0.5 * (1.0 - 0.5 * trace_norm(diff));
}

namespace {

inline double pow_conv(double lam, double e, double tau) {
    // 0^0 = 1; values at or below tau count as zero
    if (lam <= tau) return e == 0.0 ? 1.0 : 0.0;
    return std::pow(lam, e);
}

}  // namespace

double a_hat(const StatePair& pair, double s, double eps_rank) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("a_hat exponent must lie in [0,1]");
    }
    const SpectralDecomposition& dec0 = pair.dec0();
    const SpectralDecomposition& dec1 = pair.dec1();
    double max0 = 0.0, max1 = 0.0;
    for (double lam : dec0.eigenvalues) max0 = std::max(max0, std::abs(lam));
    for (double lam : dec1.eigenvalues) max1 = std::max(max1, std::abs(lam));
    const double tau0 = eps_rank * max0;
    const double tau1 = eps_rank * max1;

    const ComplexMatrix ov = matmul(dec0.eigenvectors.adjoint(), dec1.eigenvectors);
    const int d = pair.dim();
    double total = 0.0;
    for (int i = 0; i < d; ++i) {
        const double li = pow_conv(dec0.eigenvalues[static_cast<std::size_t>(i)], 1.0 - s, tau0);
        if (li == 0.0) continue;
        for (int j = 0; j < d; ++j) {
            const double gj = pow_conv(dec1.eigenvalues[static_cast<std::size_t>(j)], s, tau1);
            if (gj == 0.0) continue;
            total += li * gj * std::norm(ov(i, j));
        }
    }
    return total;
}

double a_hat_trace(const StatePair& pair, double s, double eps_rank) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("a_hat exponent must lie in [0,1]");
    }
    const HermitianMatrix f0 = frac_power(pair.rho0().matrix(), 1.0 - s, eps_rank);
    const HermitianMatrix f1 = frac_power(pair.rho1().matrix(), s, eps_rank);
    return real_trace_product(f0.matrix(), f1.matrix());
}

std::pair<double, double> a_hat_limits(const StatePair& pair, double eps_rank) {
    // lim s->0+ is Tr[rho0 supp(rho1)] = P(B) of the embedded pair; the double
    // sum makes that explicit
    const SpectralDecomposition& dec0 = pair.dec0();
    const SpectralDecomposition& dec1 = pair.dec1();
    double max0 = 0.0, max1 = 0.0;
    for (double lam : dec0.eigenvalues) max0 = std::max(max0, std::abs(lam));
    for (double lam : dec1.eigenvalues) max1 = std::max(max1, std::abs(lam));
    const double tau0 = eps_rank * max0;
    const double tau1 = eps_rank * max1;
    const ComplexMatrix ov = matmul(dec0.eigenvectors.adjoint(), dec1.eigenvectors);
    const int d = pair.dim();
    double low = 0.0, high = 0.0;
    for (int i = 0; i < d; ++i) {
        const double lam = dec0.eigenvalues[static_cast<std::size_t>(i)];
        for (int j = 0; j < d; ++j) {
            const double gam = dec1.eigenvalues[static_cast<std::size_t>(j)];
            if (lam > tau0 && gam > tau1) {
                const double o = std::norm(ov(i, j));
                low += lam * o;
                high += gam * o;
            }
        }
    }
    return {low, high};
}

QCBResult qcb(const StatePair& pair, double eps_rank) {
    const NSPair ns = ns_distributions(pair, eps_rank);
    const ChernoffResult res = chernoff(ns.p, ns.q);
    const double amin = std::isfinite(res.value) ? std::exp(res.value) : 0.0;
    return QCBResult{res.value, res.minimizer, res.sigma, res.case_tag, amin};
}

double repeated_measurement_upper(const StatePair& pair, int n, double eps_rank) {
    if (n < 1) throw ValidationError("copy count must be >= 1");
    const TestOperator pi1 = helstrom_test(pair, 1, eps_rank);
    double b0 = real_trace_product(pair.rho0().matrix().matrix(), pi1.matrix().matrix());
    double b1 = real_trace_product(pair.rho1().matrix().matrix(), pi1.matrix().matrix());
    auto snap = [](double b) {
        b = std::clamp(b, 0.0, 1.0);
        if (b < 1e-13) return 0.0;
        if (b > 1.0 - 1e-13) return 1.0;
        return b;
    };
    b0 = snap(b0);
    b1 = snap(b1);
    if (std::abs(b0 - b1) <= 1e-13) return 0.5;  // uninformative measurement
    const DiscreteDistribution bern0({1.0 - b0, b0});
    const DiscreteDistribution bern1({1.0 - b1, b1});
    return product_min_error(bern0, bern1, n);
}

}  // namespace qchernoff
