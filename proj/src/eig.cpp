#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "qchernoff/linalg.hpp"

namespace qchernoff {

namespace detail {
void sort_descending_and_fix_phases(std::vector<double>& vals, ComplexMatrix* vecs);
}

namespace {

inline double abs2(double x) { return x * x; }
inline double abs2(cplx x) { return std::norm(x); }
inline double conj_of(double x) { return x; }
inline cplx conj_of(cplx x) { return std::conj(x); }
inline double unit_phase(double x) { return x >= 0.0 ? 1.0 : -1.0; }
inline cplx unit_phase(cplx x) {
    const double r = std::abs(x);
    return r == 0.0 ? cplx(1.0, 0.0) : x / r;
}

// Householder reduction of a Hermitian matrix (full row-major storage) to a
// real symmetric tridiagonal. On return the strict lower-triangle columns of
// `a` hold the unit reflector vectors, `d` the diagonal, `sub` the complex
// subdiagonal before phase reduction, and `e` its magnitudes.
template <typename T>
void householder_tridiag(std::vector<T>& a, int n, std::vector<double>& d,
                         std::vector<double>& e, std::vector<T>& sub) {
    const std::size_t ns = static_cast<std::size_t>(n);
    sub.assign(n > 1 ? ns - 1 : 0, T(0));
    std::vector<T> v, w, u;
    for (int k = 0; k + 2 < n; ++k) {
        const int lo = k + 1;
        const int m = n - lo;
        double normx2 = 0.0;
        for (int i = lo; i < n; ++i) normx2 += abs2(a[i * ns + k]);
        const double normx = std::sqrt(normx2);
        if (normx == 0.0) {
            sub[static_cast<std::size_t>(k)] = T(0);
            continue;
        }
        const T x0 = a[lo * ns + k];
        const T alpha = -unit_phase(x0) * normx;
        sub[static_cast<std::size_t>(k)] = alpha;

        v.resize(static_cast<std::size_t>(m));
        v[0] = x0 - alpha;
        for (int i = lo + 1; i < n; ++i) v[static_cast<std::size_t>(i - lo)] = a[i * ns + k];
        double vnorm2 = 0.0;
        for (const T& z : v) vnorm2 += abs2(z);
        const double vnorm = std::sqrt(vnorm2);
        for (T& z : v) z = z * (1.0 / vnorm);
        for (int i = lo; i < n; ++i) a[i * ns + k] = v[static_cast<std::size_t>(i - lo)];

        // Trailing block B <- (I - 2vv†) B (I - 2vv†):
        // w = Bv, c = Re(v†w), u = w - cv, B -= 2*v*u† + 2*u*v†.
        w.assign(static_cast<std::size_t>(m), T(0));
#pragma omp parallel for schedule(static) if (m >= 128)
        for (int i = lo; i < n; ++i) {
            const T* row = &a[i * ns];
            T s = T(0);
            for (int j = lo; j < n; ++j) s += row[j] * v[static_cast<std::size_t>(j - lo)];
            w[static_cast<std::size_t>(i - lo)] = s;
        }
        double c = 0.0;
        for (int i = 0; i < m; ++i) {
            const std::size_t iu = static_cast<std::size_t>(i);
            if constexpr (std::is_same_v<T, double>) {
                c += v[iu] * w[iu];
            } else {
                c += (conj_of(v[iu]) * w[iu]).real();
            }
        }
        u.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const std::size_t iu = static_cast<std::size_t>(i);
            u[iu] = w[iu] - c * v[iu];
        }
#pragma omp parallel for schedule(static) if (m >= 128)
        for (int i = lo; i < n; ++i) {
            const std::size_t iu = static_cast<std::size_t>(i - lo);
            const T vi2 = 2.0 * v[iu];
            const T ui2 = 2.0 * u[iu];
            T* row = &a[i * ns];
            for (int j = lo; j < n; ++j) {
                const std::size_t ju = static_cast<std::size_t>(j - lo);
                row[j] -= vi2 * conj_of(u[ju]) + ui2 * conj_of(v[ju]);
            }
        }
    }
    if (n > 1) sub[ns - 2] = a[(ns - 1) * ns + (ns - 2)];

    d.resize(ns);
    e.assign(ns, 0.0);
    for (int i = 0; i < n; ++i) {
        if constexpr (std::is_same_v<T, double>) {
            d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(i)];
        } else {
            d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(i)].real();
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        e[static_cast<std::size_t>(i)] = std::sqrt(abs2(sub[static_cast<std::size_t>(i)]));
    }
}

// Implicit-shift QL on a real symmetric tridiagonal. d holds the diagonal and
// e the subdiagonal (e[i] couples i and i+1, e[n-1] is workspace). When z is
// non-null the rotations accumulate into the real n x n matrix z.
void tql(std::vector<double>& d, std::vector<double>& e, int n, double* z) {
    const double eps = std::numeric_limits<double>::epsilon();
    const std::size_t ns = static_cast<std::size_t>(n);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<std::size_t>(m)]) +
                                  std::abs(d[static_cast<std::size_t>(m) + 1]);
                if (std::abs(e[static_cast<std::size_t>(m)]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) {
                    throw NumericalError("tridiagonal QL iteration failed to converge",
                                         std::abs(e[static_cast<std::size_t>(l)]));
                }
                double g = (d[static_cast<std::size_t>(l) + 1] - d[static_cast<std::size_t>(l)]) /
                           (2.0 * e[static_cast<std::size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
                    e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    const std::size_t iu = static_cast<std::size_t>(i);
                    double f = s * e[iu];
                    const double b = c * e[iu];
                    r = std::hypot(f, g);
                    e[iu + 1] = r;
                    if (r == 0.0) {
                        d[iu + 1] -= p;
                        e[static_cast<std::size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[iu + 1] - p;
                    r = (d[iu] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[iu + 1] = g + p;
                    g = c * r - b;
                    if (z != nullptr) {
#pragma omp parallel for schedule(static) if (n >= 512)
                        for (int k = 0; k < n; ++k) {
                            double* row = z + static_cast<std::size_t>(k) * ns;
                            const double f2 = row[i + 1];
                            row[i + 1] = s * row[i] + c * f2;
                            row[i] = c * row[i] - s * f2;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<std::size_t>(l)] -= p;
                e[static_cast<std::size_t>(l)] = g;
                e[static_cast<std::size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

template <typename T>
std::vector<double> tridiag_eigenvalues(std::vector<T> a, int n) {
    std::vector<double> d, e;
    std::vector<T> sub;
    householder_tridiag(a, n, d, e, sub);
    tql(d, e, n, nullptr);
    return d;
}

}  // namespace

namespace detail {

void sort_descending_and_fix_phases(std::vector<double>& vals, ComplexMatrix* vecs) {
    const int n = static_cast<int>(vals.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return vals[static_cast<std::size_t>(x)] > vals[static_cast<std::size_t>(y)];
    });
    std::vector<double> sorted(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) sorted[static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    vals = std::move(sorted);
    if (vecs == nullptr) return;

    ComplexMatrix permuted(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) permuted(i, k) = (*vecs)(i, src);
    }
    // first component above the noise floor becomes real positive
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const double mag = std::abs(permuted(i, k));
            if (mag > 1e-12) {
                const cplx ph = std::conj(permuted(i, k)) / mag;
                for (int r = 0; r < n; ++r) permuted(r, k) *= ph;
                break;
            }
        }
    }
    *vecs = std::move(permuted);
}

}  // namespace detail

SpectralDecomposition eig_hermitian(const HermitianMatrix& h) {
    const int n = h.dim();
    if (n == 1) {
        SpectralDecomposition dec;
        dec.eigenvalues = {h(0, 0).real()};
        dec.eigenvectors = ComplexMatrix::identity(1);
        return dec;
    }
    const std::size_t ns = static_cast<std::size_t>(n);
    std::vector<cplx> a = h.matrix().data();
    std::vector<double> d, e;
    std::vector<cplx> sub;
    householder_tridiag(a, n, d, e, sub);

    std::vector<double> z(ns * ns, 0.0);
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(i)] = 1.0;
    tql(d, e, n, z.data());

    // phases making the subdiagonal real: t[0] = 1, t[i+1] = t[i] * sub_i/|sub_i|
    std::vector<cplx> t(ns, cplx(1.0, 0.0));
    for (int i = 1; i < n; ++i) {
        t[static_cast<std::size_t>(i)] =
            t[static_cast<std::size_t>(i) - 1] * unit_phase(sub[static_cast<std::size_t>(i) - 1]);
    }

    // eigenvectors of h: (product of reflectors) * diag(t) * z
    ComplexMatrix vecs(n, n);
#pragma omp parallel for schedule(static) if (n >= 128)
    for (int i = 0; i < n; ++i) {
        const cplx ti = t[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            vecs(i, j) = ti * z[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(j)];
        }
    }
    std::vector<cplx> f(ns);
    for (int k = n - 3; k >= 0; --k) {
        if (sub[static_cast<std::size_t>(k)] == cplx(0.0, 0.0)) continue;
        const int lo = k + 1;
        // reflector vector lives in column k, rows lo..n-1
#pragma omp parallel for schedule(static) if (n >= 128)
        for (int j = 0; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (int i = lo; i < n; ++i) {
                s += std::conj(a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(k)]) * vecs(i, j);
            }
            f[static_cast<std::size_t>(j)] = s;
        }
#pragma omp parallel for schedule(static) if (n >= 128)
        for (int i = lo; i < n; ++i) {
            const cplx vi2 = 2.0 * a[static_cast<std::size_t>(i) * ns + static_cast<std::size_t>(k)];
            for (int j = 0; j < n; ++j) {
                vecs(i, j) -= vi2 * f[static_cast<std::size_t>(j)];
            }
        }
    }

    detail::sort_descending_and_fix_phases(d, &vecs);
    return SpectralDecomposition{std::move(d), std::move(vecs)};
}

std::vector<double> eigvals_hermitian(const HermitianMatrix& h) {
    const int n = h.dim();
    if (n == 1) return {h(0, 0).real()};
    std::vector<double> vals;
    if (h.matrix().is_real(0.0)) {
        const std::size_t ns = static_cast<std::size_t>(n);
        std::vector<double> a(ns * ns);
        const std::vector<cplx>& src = h.matrix().data();
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = src[i].real();
        vals = tridiag_eigenvalues(std::move(a), n);
    } else {
        vals = tridiag_eigenvalues(h.matrix().data(), n);
    }
    detail::sort_descending_and_fix_phases(vals, nullptr);
    return vals;
}

}  // namespace qchernoff
