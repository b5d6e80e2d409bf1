#include "qchernoff/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qchernoff {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndProbe = 1e-6;    // probe offset for endpoint slope signs
constexpr double kSlopeTol = 1e-9;    // sign threshold for H' classification
constexpr double kGoldenWidth = 1e-10;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

// golden-section minimizer for a convex function on [a, b]
template <typename F>
double golden_min(F&& f, double a, double b, double width) {
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > width) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs)
    : p_(std::move(probs)) {
    if (p_.empty()) throw ValidationError("distribution must have at least one point");
    double sum = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0 && x <= 1.0 + 1e-12)) {
            throw ValidationError("distribution entry " + std::to_string(x) +
                                  " outside [0,1]");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ValidationError("distribution sums to " + std::to_string(sum) +
                              ", not 1");
    }
}

std::vector<int> DiscreteDistribution::support() const {
    std::vector<int> s;
    for (int x = 0; x < size(); ++x) {
        if (p_[static_cast<std::size_t>(x)] > 0.0) s.push_back(x);
    }
    return s;
}

void validate_priors(const Priors& w) {
    if (!(w.w0 >= 0.0) || !(w.w1 >= 0.0) || std::abs(w.w0 + w.w1 - 1.0) > 1e-12) {
        throw ValidationError("priors must be nonnegative and sum to 1");
    }
}

namespace {
void check_same_size(const DiscreteDistribution& p0, const DiscreteDistribution& p1) {
    if (p0.size() != p1.size()) {
        throw DimensionError("distributions have different alphabet sizes");
    }
}
}  // namespace

SupportPartition support_partition(const DiscreteDistribution& p0,
                                   const DiscreteDistribution& p1) {
    check_same_size(p0, p1);
    SupportPartition part;
    for (int x = 0; x < p0.size(); ++x) {
        const bool in0 = p0[x] > 0.0;
        const bool in1 = p1[x] > 0.0;
        if (in0 && in1) part.common.push_back(x);
        else if (in0) part.only0.push_back(x);
        else if (in1) part.only1.push_back(x);
    }
    return part;
}

double bayes_error(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                   const std::vector<double>& test, Priors w) {
    check_same_size(p0, p1);
    validate_priors(w);
    if (static_cast<int>(test.size()) != p0.size()) {
        throw DimensionError("test vector size differs from the alphabet");
    }
    double e = 0.0;
    for (int x = 0; x < p0.size(); ++x) {
        const double t = test[static_cast<std::size_t>(x)];
        if (t < -1e-12 || t > 1.0 + 1e-12) {
            throw ValidationError("test value " + std::to_string(t) +
                                  " outside [0,1]");
        }
        e += w.w0 * p0[x] * t + w.w1 * p1[x] * (1.0 - t);
    }
    return e;
}

std::vector<double> ml_test(const DiscreteDistribution& p0,
                            const DiscreteDistribution& p1) {
    check_same_size(p0, p1);
    std::vector<double> t(static_cast<std::size_t>(p0.size()), 0.0);
    for (int x = 0; x < p0.size(); ++x) {
        if (p1[x] > p0[x]) t[static_cast<std::size_t>(x)] = 1.0;
    }
    return t;
}

double min_error(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                 Priors w) {
    check_same_size(p0, p1);
    validate_priors(w);
    double e = 0.0;
    for (int x = 0; x < p0.size(); ++x) {
        e += std::min(w.w0 * p0[x], w.w1 * p1[x]);
    }
    return e;
}

HellingerArc::HellingerArc(const DiscreteDistribution& p0,
                           const DiscreteDistribution& p1) {
    check_same_size(p0, p1);
    alphabet_ = p0.size();
    for (int x = 0; x < p0.size(); ++x) {
        if (p0[x] > 0.0 && p1[x] > 0.0) {
            common_.push_back(x);
            logp0_.push_back(std::log(p0[x]));
            logr_.push_back(std::log(p1[x]) - std::log(p0[x]));
            beta0_ += p0[x];
            beta1_ += p1[x];
        }
    }
}

void HellingerArc::moments(double s, double& a, double& m1, double& m2) const {
    a = 0.0;
    m1 = 0.0;
    m2 = 0.0;
    for (std::size_t k = 0; k < logr_.size(); ++k) {
        const double w = std::exp(logp0_[k] + s * logr_[k]);
        a += w;
        m1 += w * logr_[k];
        m2 += w * logr_[k] * logr_[k];
    }
}

double HellingerArc::a(double s) const {
    if (empty()) throw EmptyArcError();
    double a0 = 0.0;
    for (std::size_t k = 0; k < logr_.size(); ++k) {
        a0 += std::exp(logp0_[k] + s * logr_[k]);
    }
    return a0;
}

double HellingerArc::h(double s) const { return std::log(a(s)); }

double HellingerArc::h_prime(double s) const {
    if (empty()) throw EmptyArcError();
    double a0, m1, m2;
    moments(s, a0, m1, m2);
    return m1 / a0;
}

double HellingerArc::h_second(double s) const {
    if (empty()) throw EmptyArcError();
    double a0, m1, m2;
    moments(s, a0, m1, m2);
    const double mean = m1 / a0;
    return m2 / a0 - mean * mean;
}

std::pair<double, double> HellingerArc::gammas(double s) const {
    if (empty()) throw EmptyArcError();
    double a0, m1, m2;
    moments(s, a0, m1, m2);
    const double hh = std::log(a0);
    const double hp = m1 / a0;
    return {-s * hp + hh, (1.0 - s) * hp + hh};
}

std::vector<double> HellingerArc::density(double s) const {
    if (empty()) throw EmptyArcError();
    std::vector<double> dens(static_cast<std::size_t>(alphabet_), 0.0);
    const double a0 = a(s);
    for (std::size_t k = 0; k < logr_.size(); ++k) {
        dens[static_cast<std::size_t>(common_[k])] =
            std::exp(logp0_[k] + s * logr_[k]) / a0;
    }
    return dens;
}

double arc_a(const DiscreteDistribution& p0, const DiscreteDistribution& p1, double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw ValidationError("arc parameter must lie strictly inside (0,1)");
    }
    const HellingerArc arc(p0, p1);
    if (arc.empty()) return 0.0;
    return arc.a(s);
}

ArcPoint arc_point(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                   double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw ValidationError("arc parameter must lie strictly inside (0,1)");
    }
    const HellingerArc arc(p0, p1);
    if (arc.empty()) throw EmptyArcError();
    return ArcPoint{s, arc.a(s), DiscreteDistribution(arc.density(s))};
}

const char* to_string(MinimizerKind k) {
    switch (k) {
        case MinimizerKind::Interior: return "interior";
        case MinimizerKind::LimitAtZero: return "limit-at-0";
        case MinimizerKind::LimitAtOne: return "limit-at-1";
        case MinimizerKind::MinusInfinity: return "minus-infinity";
    }
    return "?";
}

const char* to_string(ChernoffCase c) {
    switch (c) {
        case ChernoffCase::A: return "a";
        case ChernoffCase::B: return "b";
        case ChernoffCase::C: return "c";
        case ChernoffCase::D: return "d";
        case ChernoffCase::Disjoint: return "disjoint";
    }
    return "?";
}

ChernoffResult chernoff(const DiscreteDistribution& p0, const DiscreteDistribution& p1) {
    const HellingerArc arc(p0, p1);
    if (arc.empty()) {
        return ChernoffResult{-kInf, MinimizerKind::MinusInfinity, std::nullopt,
                              ChernoffCase::Disjoint};
    }
    // slope signs near the endpoints classify the convex H; overflow at a
    // probe maps to the corresponding infinite sign
    double slope0 = arc.h_prime(kEndProbe);
    double slope1 = arc.h_prime(1.0 - kEndProbe);
    if (std::isnan(slope0)) slope0 = -kInf;
    if (std::isnan(slope1)) slope1 = kInf;
    const bool neg0 = slope0 < -kSlopeTol;
    const bool pos1 = slope1 > kSlopeTol;

    if (neg0 && pos1) {
        // interior minimum; golden section on the convex H
        double sigma;
        bool flat = true;
        for (double probe : {kEndProbe, 0.5, 1.0 - kEndProbe}) {
            if (arc.h_second(probe) > 1e-12) flat = false;
        }
        if (flat) {
            // linear arc cannot land here, but a dense grid keeps this total
            int best = 1;
            double best_h = kInf;
            const int grid = 10000;
            for (int k = 1; k < grid; ++k) {
                const double s = static_cast<double>(k) / grid;
                const double hv = arc.h(s);
                if (hv < best_h) {
                    best_h = hv;
                    best = k;
                }
            }
            const double lo = std::max(kEndProbe, (best - 1.0) / grid);
            const double hi = std::min(1.0 - kEndProbe, (best + 1.0) / grid);
            sigma = golden_min([&](double s) { return arc.h(s); }, lo, hi, kGoldenWidth);
        } else {
            sigma = golden_min([&](double s) { return arc.h(s); }, kEndProbe,
                               1.0 - kEndProbe, kGoldenWidth);
        }
        return ChernoffResult{arc.h(sigma), MinimizerKind::Interior, sigma,
                              ChernoffCase::A};
    }
    if (neg0 && !pos1) {
        return ChernoffResult{std::log(arc.mass1()), MinimizerKind::LimitAtOne,
                              std::nullopt, ChernoffCase::B};
    }
    if (!neg0 && pos1) {
        return ChernoffResult{std::log(arc.mass0()), MinimizerKind::LimitAtZero,
                              std::nullopt, ChernoffCase::C};
    }
    // H' vanishes at both ends: H is constant on (0,1)
    return ChernoffResult{std::log(arc.mass0()), MinimizerKind::Interior,
                          std::nullopt, ChernoffCase::D};
}

double kl(const DiscreteDistribution& p, const DiscreteDistribution& q) {
    check_same_size(p, q);
    double s = 0.0;
    for (int x = 0; x < p.size(); ++x) {
        if (p[x] > 0.0) {
            if (q[x] == 0.0) return kInf;
            s += p[x] * (std::log(p[x]) - std::log(q[x]));
        }
    }
    return std::max(s, 0.0);
}

double chernoff_kl_form(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                        int grid_points) {
    if (grid_points < 3) throw ValidationError("kl-form grid needs at least 3 points");
    const HellingerArc arc(p0, p1);
    if (arc.empty()) throw EmptyArcError();

    const double lb0 = std::log(arc.mass0());
    const double lb1 = std::log(arc.mass1());

    std::vector<double> q0(static_cast<std::size_t>(p0.size()), 0.0);
    std::vector<double> q1(static_cast<std::size_t>(p0.size()), 0.0);
    for (int x = 0; x < p0.size(); ++x) {
        if (p0[x] > 0.0 && p1[x] > 0.0) {
            q0[static_cast<std::size_t>(x)] = p0[x] / arc.mass0();
            q1[static_cast<std::size_t>(x)] = p1[x] / arc.mass1();
        }
    }
    const DiscreteDistribution cond0(q0), cond1(q1);

    auto objective = [&](double s) {
        const DiscreteDistribution qs(arc.density(s));
        return -(1.0 - s) * kl(qs, cond0) - s * kl(qs, cond1) +
               (1.0 - s) * lb0 + s * lb1;
    };

    // grid over [0,1]; the endpoints contribute their limit values
    double best = std::min(lb0, lb1);
    int best_k = -1;
    for (int k = 1; k + 1 < grid_points; ++k) {
        const double s = static_cast<double>(k) / (grid_points - 1);
        const double v = objective(s);
        if (v < best) {
            best = v;
            best_k = k;
        }
    }
    if (best_k >= 0) {
        const double step = 1.0 / (grid_points - 1);
        const double lo = std::max(1e-9, best_k * step - step);
        const double hi = std::min(1.0 - 1e-9, best_k * step + step);
        const double s_ref = golden_min(objective, lo, hi, 1e-12);
        best = std::min(best, objective(s_ref));
    }
    return best;
}

SigmaCheck sigma_characterization(const DiscreteDistribution& p0,
                                  const DiscreteDistribution& p1) {
    const ChernoffResult res = chernoff(p0, p1);
    if (res.case_tag != ChernoffCase::A || !res.sigma.has_value()) {
        throw PreconditionError(
            "sigma characterization requires an interior critical point (case a)");
    }
    const HellingerArc arc(p0, p1);
    const double sigma = *res.sigma;

    std::vector<double> q0(static_cast<std::size_t>(p0.size()), 0.0);
    std::vector<double> q1(static_cast<std::size_t>(p0.size()), 0.0);
    for (int x = 0; x < p0.size(); ++x) {
        if (p0[x] > 0.0 && p1[x] > 0.0) {
            q0[static_cast<std::size_t>(x)] = p0[x] / arc.mass0();
            q1[static_cast<std::size_t>(x)] = p1[x] / arc.mass1();
        }
    }
    const DiscreteDistribution qs(arc.density(sigma));
    const double via0 = -kl(qs, DiscreteDistribution(q0)) + std::log(arc.mass0());
    const double via1 = -kl(qs, DiscreteDistribution(q1)) + std::log(arc.mass1());
    return SigmaCheck{sigma, res.value, std::abs(res.value - via0),
                      std::abs(res.value - via1)};
}

namespace {

double composition_count(int n, int m) {
    // C(n + m - 1, m - 1) in floating point; exact well past the cap
    double r = 1.0;
    for (int k = 1; k < m; ++k) {
        r *= static_cast<double>(n + k) / static_cast<double>(k);
    }
    return r;
}

struct LogProbs {
    std::vector<double> lp0, lp1;
    double lw0, lw1;
};

// partial sum over all count vectors for symbols [pos, m) with `left` draws,
// accumulated in lexicographic order
double type_class_block(const LogProbs& lp, int pos, int left, double logw,
                        double l0, double l1) {
    const int m = static_cast<int>(lp.lp0.size());
    if (pos == m - 1) {
        const double lw = logw - std::lgamma(static_cast<double>(left) + 1.0);
        const double a = l0 + (left > 0 ? left * lp.lp0[static_cast<std::size_t>(pos)] : 0.0);
        const double b = l1 + (left > 0 ? left * lp.lp1[static_cast<std::size_t>(pos)] : 0.0);
        const double t = std::min(lp.lw0 + a, lp.lw1 + b);
        return t == -kInf ? 0.0 : std::exp(lw + t);
    }
    double total = 0.0;
    for (int k = 0; k <= left; ++k) {
        total += type_class_block(
            lp, pos + 1, left - k, logw - std::lgamma(static_cast<double>(k) + 1.0),
            l0 + (k > 0 ? k * lp.lp0[static_cast<std::size_t>(pos)] : 0.0),
            l1 + (k > 0 ? k * lp.lp1[static_cast<std::size_t>(pos)] : 0.0));
    }
    return total;
}

}  // namespace

double product_min_error(const DiscreteDistribution& p0, const DiscreteDistribution& p1,
                         int n, Priors w, std::size_t class_cap) {
    check_same_size(p0, p1);
    validate_priors(w);
    if (n < 1) throw ValidationError("product error requires n >= 1");
    const int m = p0.size();
    const double classes = composition_count(n, m);
    if (classes > static_cast<double>(class_cap)) {
        throw SizeCapError("type-class count " + std::to_string(classes) +
                           " exceeds the cap of " + std::to_string(class_cap));
    }

    LogProbs lp;
    lp.lp0.resize(static_cast<std::size_t>(m));
    lp.lp1.resize(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
        lp.lp0[static_cast<std::size_t>(x)] = p0[x] > 0.0 ? std::log(p0[x]) : -kInf;
        lp.lp1[static_cast<std::size_t>(x)] = p1[x] > 0.0 ? std::log(p1[x]) : -kInf;
    }
    lp.lw0 = w.w0 > 0.0 ? std::log(w.w0) : -kInf;
    lp.lw1 = w.w1 > 0.0 ? std::log(w.w1) : -kInf;

    if (m == 1) {
        const double t = std::min(lp.lw0 + n * lp.lp0[0], lp.lw1 + n * lp.lp1[0]);
        return t == -kInf ? 0.0 : std::exp(t);
    }

    // Fixed blocks by the first symbol's count. Each block accumulates
    // sequentially and blocks combine in ascending order, so the result is
    // identical for any thread count.
    const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
    std::vector<double> partial(static_cast<std::size_t>(n) + 1, 0.0);
#pragma omp parallel for schedule(dynamic) if (n >= 8)
    for (int k = 0; k <= n; ++k) {
        partial[static_cast<std::size_t>(k)] = type_class_block(
            lp, 1, n - k, lgn - std::lgamma(static_cast<double>(k) + 1.0),
            k > 0 ? k * lp.lp0[0] : 0.0, k > 0 ? k * lp.lp1[0] : 0.0);
    }
    double total = 0.0;
    for (int k = 0; k <= n; ++k) total += partial[static_cast<std::size_t>(k)];
    return total;
}

}  // namespace qchernoff
