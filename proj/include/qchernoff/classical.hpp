#pragma once

#include <optional>
#include <vector>

#include "qchernoff/config.hpp"
#include "qchernoff/errors.hpp"

namespace qchernoff {

// Probability vector over a finite alphabet. Supports are determined by exact
// 0.0 entries; inputs are never thresholded.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> probs);

    int size() const noexcept { return static_cast<int>(p_.size()); }
    double operator[](int x) const noexcept { return p_[static_cast<std::size_t>(x)]; }
    const std::vector<double>& probs() const noexcept { return p_; }
    std::vector<int> support() const;

private:
    std::vector<double> p_;
};

struct Priors {
    double w0 = 0.5;
    double w1 = 0.5;
};
void validate_priors(const Priors& w);

// B = supp(P0) & supp(P1); only0/only1 are the rest of each support.
struct SupportPartition {
    std::vector<int> common;
    std::vector<int> only0;
    std::vector<int> only1;
};
SupportPartition support_partition(const DiscreteDistribution& p0,
                                   const DiscreteDistribution& p1);

// w0 * E_P0[test] + w1 * E_P1[1 - test]
double bayes_error(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                   const std::vector<double>& test, Priors w = {});

// maximum-likelihood test 1{p1 > p0}; ties decide for H0
std::vector<double> ml_test(const DiscreteDistribution& p0,
                            const DiscreteDistribution& p1);

// minimal Bayes error: sum of min(w0 p0, w1 p1)
double min_error(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                 Priors w = {});

// The Hellinger arc p_s proportional to p0^{1-s} p1^s on the common support,
// with its log-normalizer H(s) = log A(s) and derivatives. H' is the
// p_s-expectation of log(p1/p0), H'' its variance.
class HellingerArc {
public:
    HellingerArc(const DiscreteDistribution& p0, const DiscreteDistribution& p1);

    bool empty() const noexcept { return logr_.empty(); }
    double mass0() const noexcept { return beta0_; }  // P0(B)
    double mass1() const noexcept { return beta1_; }  // P1(B)

    double a(double s) const;
    double h(double s) const;
    double h_prime(double s) const;
    double h_second(double s) const;
    // (gamma0, gamma1) = (-s H' + H, (1-s) H' + H)
    std::pair<double, double> gammas(double s) const;

    // arc density on the full alphabet, zero off the common support
    std::vector<double> density(double s) const;

private:
    void moments(double s, double& a, double& m1, double& m2) const;

    std::vector<int> common_;
    std::vector<double> logp0_;  // log p0 on B
    std::vector<double> logr_;   // log(p1/p0) on B
    double beta0_ = 0.0;
    double beta1_ = 0.0;
    int alphabet_ = 0;
};

struct ArcPoint {
    double s;
    double normalizer;  // A(s)
    DiscreteDistribution density;
};

double arc_a(const DiscreteDistribution& p0, const DiscreteDistribution& p1, double s);
ArcPoint arc_point(const DiscreteDistribution& p0, const DiscreteDistribution& p1, double s);

enum class MinimizerKind { Interior, LimitAtZero, LimitAtOne, MinusInfinity };
enum class ChernoffCase { A, B, C, D, Disjoint };

const char* to_string(MinimizerKind k);
const char* to_string(ChernoffCase c);

struct ChernoffResult {
    double value = 0.0;  // inf of H over [0,1]; <= 0; -inf iff supports disjoint
    MinimizerKind minimizer = MinimizerKind::Interior;
    std::optional<double> sigma;  // interior critical point, case (a) only
    ChernoffCase case_tag = ChernoffCase::D;
};

ChernoffResult chernoff(const DiscreteDistribution& p0, const DiscreteDistribution& p1);

// relative entropy; +inf when supp(p) is not contained in supp(q)
double kl(const DiscreteDistribution& p, const DiscreteDistribution& q);

// Chernoff value through the relative-entropy form
//   inf_s -(1-s) K(Q_s||Q_0) - s K(Q_s||Q_1) + log(beta0^{1-s} beta1^s)
// evaluated on a dense grid plus local refinement. Throws EmptyArcError when
// the supports are disjoint.
double chernoff_kl_form(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                        int grid_points = 10001);

// Residuals of the two interior-minimizer identities
//   value = -K(Q_sigma||Q_i) + log beta_i.
// Precondition: chernoff lands in case (a).
struct SigmaCheck {
    double sigma;
    double value;
    double residual0;
    double residual1;
};
SigmaCheck sigma_characterization(const DiscreteDistribution& p0,
                                  const DiscreteDistribution& p1);

// Exact minimal Bayes error between the n-fold products, by type-class
// enumeration in log space. Deterministic blocked reduction; identical
// results for any thread count.
double product_min_error(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                         int n, Priors w = {}, std::size_t class_cap = kTypeClassCap);

}  // namespace qchernoff
