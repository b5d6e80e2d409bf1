// Timing comparison between the production kernels (OpenMP-parallel) and the
// serial reference implementations.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qchernoff/classical.hpp"
#include "qchernoff/linalg.hpp"
#include "qchernoff/reference.hpp"
#include "qchernoff/rng.hpp"
#include "qchernoff/states.hpp"

using namespace qchernoff;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

HermitianMatrix random_hermitian(int d, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = rng.complex_normal();
    }
    return HermitianMatrix(std::move(m));
}

template <typename F>
double time_ms(F&& f) {
    const double t0 = now_ms();
    f();
    return now_ms() - t0;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif

    std::printf("\n-- Hermitian eigensolve: tridiagonal QL vs cyclic Jacobi --\n");
    std::printf("%6s %14s %14s\n", "dim", "ql_ms", "jacobi_ms");
    for (int d : {16, 32, 64, 128, 256}) {
        const HermitianMatrix h = random_hermitian(d, 1000 + static_cast<std::uint64_t>(d));
        SpectralDecomposition a, b;
        const double t_ql = time_ms([&] { a = eig_hermitian(h); });
        const double t_j = time_ms([&] { b = reference::eig_hermitian_jacobi(h); });
        double dev = 0.0;
        for (std::size_t k = 0; k < a.eigenvalues.size(); ++k) {
            dev = std::max(dev, std::abs(a.eigenvalues[k] - b.eigenvalues[k]));
        }
        std::printf("%6d %14.2f %14.2f   (max eigenvalue gap %.3g)\n", d, t_ql, t_j, dev);
    }

    std::printf("\n-- eigenvalues only, larger dims --\n");
    std::printf("%6s %14s\n", "dim", "ql_ms");
    for (int d : {512, 1024, 2048}) {
        const HermitianMatrix h = random_hermitian(d, 2000 + static_cast<std::uint64_t>(d));
        std::vector<double> vals;
        const double t = time_ms([&] { vals = eigvals_hermitian(h); });
        std::printf("%6d %14.2f\n", d, t);
    }

    std::printf("\n-- kron: parallel vs serial --\n");
    std::printf("%10s %12s %12s\n", "out_dim", "par_ms", "serial_ms");
    for (int d : {32, 48, 64}) {
        const HermitianMatrix a = random_hermitian(d, 31);
        const HermitianMatrix b = random_hermitian(d, 32);
        ComplexMatrix k1, k2;
        const double t_p = time_ms([&] { k1 = kron(a.matrix(), b.matrix(), 1u << 20); });
        const double t_s = time_ms([&] { k2 = reference::kron_serial(a.matrix(), b.matrix()); });
        std::printf("%10d %12.2f %12.2f   (diff %.3g)\n", d * d, t_p, t_s,
                    (k1 - k2).frobenius_norm());
    }

    std::printf("\n-- tensor-power difference: direct assembly vs kron chain --\n");
    std::printf("%4s %10s %12s %12s\n", "n", "dim", "par_ms", "serial_ms");
    {
        const StatePair pair(random_density(2, 2, 71), random_density(2, 2, 72));
        for (int n : {6, 8, 10}) {
            HermitianMatrix d1 = HermitianMatrix::zero(1), d2 = HermitianMatrix::zero(1);
            const double t_p = time_ms([&] {
                d1 = tensor_power_diff(pair.rho0().matrix(), pair.rho1().matrix(), n);
            });
            const double t_s = time_ms([&] {
                d2 = reference::tensor_power_diff_serial(pair.rho0().matrix(),
                                                         pair.rho1().matrix(), n);
            });
            std::printf("%4d %10d %12.2f %12.2f   (diff %.3g)\n", n, 1 << n, t_p, t_s,
                        (d1.matrix() - d2.matrix()).frobenius_norm());
        }
    }

    std::printf("\n-- type-class product error: blocked parallel vs serial --\n");
    std::printf("%4s %4s %12s %12s\n", "m", "n", "par_ms", "serial_ms");
    {
        Rng rng(5150);
        for (int n : {200, 400, 600}) {
            const int m = 4;
            std::vector<double> p0(m), p1(m);
            double s0 = 0.0, s1 = 0.0;
            for (int x = 0; x < m; ++x) {
                p0[static_cast<std::size_t>(x)] = 0.1 + rng.uniform();
                p1[static_cast<std::size_t>(x)] = 0.1 + rng.uniform();
                s0 += p0[static_cast<std::size_t>(x)];
                s1 += p1[static_cast<std::size_t>(x)];
            }
            for (int x = 0; x < m; ++x) {
                p0[static_cast<std::size_t>(x)] /= s0;
                p1[static_cast<std::size_t>(x)] /= s1;
            }
            const DiscreteDistribution d0(p0), d1(p1);
            double v1 = 0.0, v2 = 0.0;
            const double t_p = time_ms([&] { v1 = product_min_error(d0, d1, n); });
            const double t_s =
                time_ms([&] { v2 = reference::product_min_error_serial(p0, p1, n, 0.5, 0.5); });
            std::printf("%4d %4d %12.2f %12.2f   (rel diff %.3g)\n", m, n, t_p, t_s,
                        std::abs(v1 - v2) / v1);
        }
    }
    return 0;
}
