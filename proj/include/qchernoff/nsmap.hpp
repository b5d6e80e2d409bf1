#pragma once

#include <span>

#include "qchernoff/classical.hpp"
#include "qchernoff/states.hpp"

namespace qchernoff {

// Classical embedding of a state pair on d^2 points:
//   p[(i,j)] = lambda_i |<x_i|y_j>|^2,  q[(i,j)] = gamma_j |<x_i|y_j>|^2
// with flat row-major index (i,j) -> i*d + j. Eigenvalues at or below
// eps_rank * max are treated as exact zeros so the embedded supports reflect
// the state ranks.
struct NSPair {
    int dim;  // d, so the distributions live on d*d points
    DiscreteDistribution p;
    DiscreteDistribution q;
};

NSPair ns_distributions(const StatePair& pair, double eps_rank = kEpsRank);

// 1/4 sum_ij min(p_ij, q_ij): a floor on the Bayes error of every projection
// test, equal to half the minimal classical error of the embedded pair.
double error_floor(const StatePair& pair, double eps_rank = kEpsRank);

// Max residual over the grid of |sum_ij p^{1-s} q^s - Tr[rho0^{1-s} rho1^s]|,
// the two sides computed through independent code paths (classical arc versus
// dense fractional-power trace).
double ns_chernoff_identity_check(const StatePair& pair, std::span<const double> s_grid,
                                  double eps_rank = kEpsRank);

}  // namespace qchernoff
