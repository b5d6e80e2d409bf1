#pragma once

#include <utility>

#include "qchernoff/classical.hpp"
#include "qchernoff/nsmap.hpp"
#include "qchernoff/states.hpp"

namespace qchernoff {

// Two-outcome measurement element r with 0 <= r <= 1 in matrix order.
class TestOperator {
public:
    explicit TestOperator(HermitianMatrix m, double eps_rank = kEpsRank);

    // for operators already known valid (projections built internally)
    static TestOperator unchecked(HermitianMatrix m);

    int dim() const noexcept { return mat_.dim(); }
    const HermitianMatrix& matrix() const noexcept { return mat_; }

private:
    struct Unchecked {};
    TestOperator(HermitianMatrix m, Unchecked) : mat_(std::move(m)) {}
    HermitianMatrix mat_;
};

// (1/2) Tr[r rho0^n] + (1/2) Tr[(1 - r) rho1^n] on the n-copy space
double bayes_error_quantum(const StatePair& pair, int n, const TestOperator& r);

// Holevo-Helstrom projection supp(rho1^n - rho0^n)_+; eigenvalues within
// eps_rank of zero are excluded (ties reject H1).
TestOperator helstrom_test(const StatePair& pair, int n, double eps_rank = kEpsRank);

// (1/2)(1 - (1/2) ||rho1^n - rho0^n||_1), the optimum over all tests
double min_error_exact(const StatePair& pair, int n);

// Tr[rho0^{1-s} rho1^s] via the spectral double sum
//   sum_ij lambda_i^{1-s} gamma_j^s |<x_i|y_j>|^2
// with 0^0 = 1 at the endpoints, so a_hat(0) = a_hat(1) = 1.
double a_hat(const StatePair& pair, double s, double eps_rank = kEpsRank);

// same quantity via dense fractional powers and a trace; the secondary route
// used by identity checks
double a_hat_trace(const StatePair& pair, double s, double eps_rank = kEpsRank);

// one-sided endpoint limits: (lim s->0+, lim s->1-)
std::pair<double, double> a_hat_limits(const StatePair& pair,
                                       double eps_rank = kEpsRank);

struct QCBResult {
    double bound;  // inf over [0,1] of log a_hat; -inf iff supports orthogonal
    MinimizerKind minimizer;
    std::optional<double> sigma;
    ChernoffCase case_tag;
    double a_hat_min;  // exp(bound), 0 when the bound is -inf
};

// The quantum Chernoff bound, computed as the classical Chernoff quantity of
// the embedded pair; the spectral identity makes the two coincide on (0,1).
QCBResult qcb(const StatePair& pair, double eps_rank = kEpsRank);

// Error of a concrete separable strategy: per-copy Helstrom measurement
// followed by the classical maximum-likelihood rule on the n outcomes.
// Returns 1/2 when the single-copy measurement is uninformative.
double repeated_measurement_upper(const StatePair& pair, int n,
                                  double eps_rank = kEpsRank);

}  // namespace qchernoff
