#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qchernoff/quantum.hpp"

namespace qchernoff::harness {

struct GeneratorSpec {
    int dim = 2;
    int rank = 2;
    std::uint64_t seed = 0;
};

struct ExperimentConfig {
    std::optional<std::string> state0_path;
    std::optional<std::string> state1_path;
    std::vector<GeneratorSpec> gens;  // fallback sources, in state order
    int n_max = 10;                   // converge / classical row count
    int n = 1;                        // error subcommand copy count
    int grid = 101;                   // s-grid size for the nsmap identity
    double eps_rank = kEpsRank;
    Priors priors{};                  // classical subcommand only
};

// rho0 = diag(0.75, 0.25), rho1 = [[0.5, 0.25], [0.25, 0.5]]: the pair used
// whenever no state source is given.
StatePair default_qubit_pair();

// State sources resolve in order: explicit file path, then the matching
// --gen spec (a single spec also seeds the second state with seed+1), then
// the default qubit pair.
StatePair resolve_pair(const ExperimentConfig& cfg);

struct ConvergenceRow {
    int n;
    double err_exact;
    double exponent;   // (1/n) log err_exact
    double floor_log;  // (1/n) log of the embedded-pair error floor at n
    double upper_log;  // (1/n) log of the repeated-measurement error at n
    double qcb_bound;
};

struct ConvergeReport {
    QCBResult bound;
    std::vector<ConvergenceRow> rows;
    std::vector<int> skipped;  // n values beyond the size cap
    std::string csv;           // header + one line per feasible n, LF endings
    std::string summary;       // "# summary qcb_bound=... gap=..."
};

ConvergeReport run_converge(const ExperimentConfig& cfg);

// JSON report strings
std::string run_classical(const ExperimentConfig& cfg);
std::string run_nsmap(const ExperimentConfig& cfg);
std::string run_qcb(const ExperimentConfig& cfg);
std::string run_error(const ExperimentConfig& cfg);

}  // namespace qchernoff::harness
