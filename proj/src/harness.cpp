#include "qchernoff/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qchernoff/io.hpp"

namespace qchernoff::harness {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_log(double x) { return x > 0.0 ? std::log(x) : -kInf; }
}  // namespace

StatePair default_qubit_pair() {
    ComplexMatrix m0(2, 2);
    m0(0, 0) = 0.75;
    m0(1, 1) = 0.25;
    ComplexMatrix m1(2, 2);
    m1(0, 0) = 0.5;
    m1(0, 1) = 0.25;
    m1(1, 0) = 0.25;
    m1(1, 1) = 0.5;
    return StatePair(validate_density(HermitianMatrix(std::move(m0))),
                     validate_density(HermitianMatrix(std::move(m1))));
}

StatePair resolve_pair(const ExperimentConfig& cfg) {
    auto resolve = [&](int which) -> std::optional<DensityMatrix> {
        const auto& path = which == 0 ? cfg.state0_path : cfg.state1_path;
        if (path.has_value()) return load_state_json(*path);
        if (static_cast<int>(cfg.gens.size()) > which) {
            const GeneratorSpec& g = cfg.gens[static_cast<std::size_t>(which)];
            return random_density(g.dim, g.rank, g.seed);
        }
        if (which == 1 && cfg.gens.size() == 1) {
            const GeneratorSpec& g = cfg.gens[0];
            return random_density(g.dim, g.rank, g.seed + 1);
        }
        return std::nullopt;
    };
    std::optional<DensityMatrix> rho0 = resolve(0);
    std::optional<DensityMatrix> rho1 = resolve(1);
    if (!rho0.has_value() && !rho1.has_value()) return default_qubit_pair();
    if (!rho0.has_value() || !rho1.has_value()) {
        throw ValidationError("exactly one state source given; need both or neither");
    }
    return StatePair(std::move(*rho0), std::move(*rho1));
}

ConvergeReport run_converge(const ExperimentConfig& cfg) {
    if (cfg.n_max < 1) throw ValidationError("n_max must be >= 1");
    const StatePair pair = resolve_pair(cfg);
    ConvergeReport rep;
    rep.bound = qcb(pair, cfg.eps_rank);
    const NSPair ns = ns_distributions(pair, cfg.eps_rank);

    std::ostringstream csv;
    csv << "n,err_exact,exponent,floor,upper,qcb_bound\n";
    for (int n = 1; n <= cfg.n_max; ++n) {
        double err;
        try {
            err = std::max(min_error_exact(pair, n), 0.0);
        } catch (const SizeCapError&) {
            rep.skipped.push_back(n);
            continue;
        }
        const double floor_err = std::max(0.5 * product_min_error(ns.p, ns.q, n), 0.0);
        const double upper_err = std::max(repeated_measurement_upper(pair, n, cfg.eps_rank), 0.0);
        ConvergenceRow row;
        row.n = n;
        row.err_exact = err;
        row.exponent = safe_log(err) / n;
        row.floor_log = safe_log(floor_err) / n;
        row.upper_log = safe_log(upper_err) / n;
        row.qcb_bound = rep.bound.bound;
        if (!(row.floor_log <= row.exponent + 1e-12) ||
            !(row.exponent <= row.upper_log + 1e-12)) {
            throw NumericalError(
                "convergence row invariant violated at n=" + std::to_string(n) +
                    ": floor=" + fmt_g17(row.floor_log) + " exponent=" +
                    fmt_g17(row.exponent) + " upper=" + fmt_g17(row.upper_log),
                std::max(row.floor_log - row.exponent, row.exponent - row.upper_log));
        }
        rep.rows.push_back(row);
        csv << row.n << ',' << fmt_g17(row.err_exact) << ',' << fmt_g17(row.exponent)
            << ',' << fmt_g17(row.floor_log) << ',' << fmt_g17(row.upper_log) << ','
            << fmt_g17(row.qcb_bound) << '\n';
    }
    rep.csv = csv.str();
    const double gap =
        rep.rows.empty() ? std::nan("") : rep.rows.back().exponent - rep.bound.bound;
    rep.summary = "# summary qcb_bound=" + fmt_g17(rep.bound.bound) +
                  " gap=" + fmt_g17(gap);
    return rep;
}

namespace {

std::string chernoff_json(const ChernoffResult& res) {
    std::ostringstream out;
    out << "{\"value\": " << json_number(res.value) << ", \"case\": \""
        << to_string(res.case_tag) << "\", \"minimizer\": \""
        << to_string(res.minimizer) << "\", \"sigma\": ";
    if (res.sigma.has_value()) {
        out << json_number(*res.sigma);
    } else {
        out << "null";
    }
    out << "}";
    return out.str();
}

}  // namespace

std::string run_classical(const ExperimentConfig& cfg) {
    if (!cfg.state0_path.has_value() || !cfg.state1_path.has_value()) {
        throw ValidationError("classical run needs two distribution files");
    }
    const DiscreteDistribution p0 = load_distribution_json(*cfg.state0_path);
    const DiscreteDistribution p1 = load_distribution_json(*cfg.state1_path);
    validate_priors(cfg.priors);

    const double delta = min_error(p0, p1, cfg.priors);
    const ChernoffResult res = chernoff(p0, p1);

    std::ostringstream out;
    out << "{\"delta\": " << json_number(delta)
        << ", \"chernoff\": " << chernoff_json(res) << ", \"kl_form\": ";
    if (res.case_tag == ChernoffCase::Disjoint) {
        out << "null";
    } else {
        out << json_number(chernoff_kl_form(p0, p1));
    }
    out << ", \"sigma_check\": ";
    if (res.case_tag == ChernoffCase::A) {
        const SigmaCheck check = sigma_characterization(p0, p1);
        out << "{\"sigma\": " << json_number(check.sigma)
            << ", \"residual0\": " << json_number(check.residual0)
            << ", \"residual1\": " << json_number(check.residual1) << "}";
    } else {
        out << "null";
    }
    out << ", \"rows\": [";
    bool first = true;
    for (int n = 1; n <= cfg.n_max; ++n) {
        double dn;
        try {
            dn = product_min_error(p0, p1, n, cfg.priors);
        } catch (const SizeCapError&) {
            break;
        }
        out << (first ? "" : ", ") << "{\"n\": " << n
            << ", \"delta_n\": " << json_number(dn)
            << ", \"exponent\": " << json_number(safe_log(dn) / n) << "}";
        first = false;
    }
    out << "]}";
    return out.str();
}

namespace {

std::vector<double> interior_grid(int points) {
    if (points < 1) throw ValidationError("grid must have at least one point");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int k = 1; k <= points; ++k) {
        grid[static_cast<std::size_t>(k - 1)] =
            static_cast<double>(k) / (points + 1);
    }
    return grid;
}

}  // namespace

std::string run_nsmap(const ExperimentConfig& cfg) {
    const StatePair pair = resolve_pair(cfg);
    const NSPair ns = ns_distributions(pair, cfg.eps_rank);
    const std::vector<double> grid = interior_grid(cfg.grid);
    const double residual = ns_chernoff_identity_check(pair, grid, cfg.eps_rank);

    std::ostringstream out;
    out << "{\"dim\": " << ns.dim << ", \"p\": [";
    for (int x = 0; x < ns.p.size(); ++x) out << (x ? ", " : "") << fmt_g17(ns.p[x]);
    out << "], \"q\": [";
    for (int x = 0; x < ns.q.size(); ++x) out << (x ? ", " : "") << fmt_g17(ns.q[x]);
    out << "], \"identity_residual\": " << json_number(residual)
        << ", \"grid_points\": " << cfg.grid << "}";
    return out.str();
}

std::string run_qcb(const ExperimentConfig& cfg) {
    const StatePair pair = resolve_pair(cfg);
    const QCBResult res = qcb(pair, cfg.eps_rank);
    const auto [plus0, minus1] = a_hat_limits(pair, cfg.eps_rank);

    std::ostringstream out;
    out << "{\"bound\": " << json_number(res.bound) << ", \"case\": \""
        << to_string(res.case_tag) << "\", \"minimizer\": \""
        << to_string(res.minimizer) << "\", \"sigma\": ";
    if (res.sigma.has_value()) {
        out << json_number(*res.sigma);
    } else {
        out << "null";
    }
    out << ", \"a_hat_min\": " << json_number(res.a_hat_min)
        << ", \"a_hat_plus0\": " << json_number(plus0)
        << ", \"a_hat_minus1\": " << json_number(minus1) << "}";
    return out.str();
}

std::string run_error(const ExperimentConfig& cfg) {
    const StatePair pair = resolve_pair(cfg);
    const double err = min_error_exact(pair, cfg.n);

    std::size_t dim = 1;
    for (int k = 0; k < cfg.n; ++k) dim *= static_cast<std::size_t>(pair.dim());

    std::ostringstream out;
    out << "{\"n\": " << cfg.n << ", \"dim\": " << dim
        << ", \"err_exact\": " << json_number(err);
    if (dim <= 512) {
        // cross-check: the Holevo-Helstrom projection must achieve the optimum
        const TestOperator pi = helstrom_test(pair, cfg.n, cfg.eps_rank);
        const double err_h = bayes_error_quantum(pair, cfg.n, pi);
        out << ", \"err_helstrom\": " << json_number(err_h)
            << ", \"helstrom_residual\": " << json_number(std::abs(err_h - err));
    } else {
        out << ", \"err_helstrom\": null, \"helstrom_residual\": null";
    }
    out << "}";
    return out.str();
}

}  // namespace qchernoff::harness
