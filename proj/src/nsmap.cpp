#include "qchernoff/nsmap.hpp"

#include <cmath>

#include "qchernoff/quantum.hpp"

namespace qchernoff {

NSPair ns_distributions(const StatePair& pair, double eps_rank) {
    const int d = pair.dim();
    const SpectralDecomposition& dec0 = pair.dec0();
    const SpectralDecomposition& dec1 = pair.dec1();

    double max0 = 0.0, max1 = 0.0;
    for (double lam : dec0.eigenvalues) max0 = std::max(max0, std::abs(lam));
    for (double lam : dec1.eigenvalues) max1 = std::max(max1, std::abs(lam));
    const double tau0 = eps_rank * max0;
    const double tau1 = eps_rank * max1;

    // overlap matrix |<x_i|y_j>|^2
    const ComplexMatrix ov = matmul(dec0.eigenvectors.adjoint(), dec1.eigenvectors);

    std::vector<double> p(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0.0);
    std::vector<double> q(p.size(), 0.0);
    for (int i = 0; i < d; ++i) {
        const double lam = dec0.eigenvalues[static_cast<std::size_t>(i)];
        for (int j = 0; j < d; ++j) {
            const double gam = dec1.eigenvalues[static_cast<std::size_t>(j)];
            const double o = std::norm(ov(i, j));
            const std::size_t idx = static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                                    static_cast<std::size_t>(j);
            p[idx] = lam > tau0 ? lam * o : 0.0;
            q[idx] = gam > tau1 ? gam * o : 0.0;
        }
    }
    double sp = 0.0, sq = 0.0;
    for (double v : p) sp += v;
    for (double v : q) sq += v;
    for (double& v : p) v /= sp;
    for (double& v : q) v /= sq;
    return NSPair{d, DiscreteDistribution(std::move(p)), DiscreteDistribution(std::move(q))};
}

double error_floor(const StatePair& pair, double eps_rank) {
    const NSPair ns = ns_distributions(pair, eps_rank);
    return 0.5 * min_error(ns.p, ns.q);
}

double ns_chernoff_identity_check(const StatePair& pair, std::span<const double> s_grid,
                                  double eps_rank) {
    const NSPair ns = ns_distributions(pair, eps_rank);
    double worst = 0.0;
    for (double s : s_grid) {
        const double lhs = arc_a(ns.p, ns.q, s);
        const double rhs = a_hat_trace(pair, s, eps_rank);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace qchernoff
