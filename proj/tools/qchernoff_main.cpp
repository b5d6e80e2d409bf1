#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qchernoff/harness.hpp"
#include "qchernoff/io.hpp"

namespace {

using qchernoff::harness::ExperimentConfig;
using qchernoff::harness::GeneratorSpec;

GeneratorSpec parse_gen(const std::string& spec) {
    GeneratorSpec g;
    unsigned long long seed = 0;
    if (std::sscanf(spec.c_str(), "%d,%d,%llu", &g.dim, &g.rank, &seed) != 3) {
        throw qchernoff::ValidationError("--gen expects d,rank,seed");
    }
    g.seed = seed;
    if (g.dim < 1 || g.rank < 1 || g.rank > g.dim) {
        throw qchernoff::ValidationError("--gen needs 1 <= rank <= d");
    }
    return g;
}

qchernoff::Priors parse_priors(const std::string& spec) {
    qchernoff::Priors w;
    if (std::sscanf(spec.c_str(), "%lf,%lf", &w.w0, &w.w1) != 2) {
        throw qchernoff::ValidationError("--priors expects w0,w1");
    }
    qchernoff::validate_priors(w);
    return w;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qchernoff::ValidationError("cannot write to " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric hypothesis testing between quantum states"};
    app.require_subcommand(1);

    std::string state0, state1, out_path, priors_spec;
    std::vector<std::string> gen_specs;
    int n_converge = 10, n_error = 1, grid = 101, n_classical = 10;
    double eps_rank = qchernoff::kEpsRank;

    app.add_option("--state0", state0, "state (or distribution) JSON file for H0");
    app.add_option("--state1", state1, "state (or distribution) JSON file for H1");
    app.add_option("--gen", gen_specs,
                   "generator spec d,rank,seed (repeat for the second state; a "
                   "single spec uses seed+1 for it)");
    app.add_option("--eps-rank", eps_rank, "zero-eigenvalue threshold, relative");
    app.add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* cmd_qcb = app.add_subcommand("qcb", "quantum Chernoff bound of a pair");
    CLI::App* cmd_error = app.add_subcommand("error", "exact n-copy minimal error");
    cmd_error->add_option("--n", n_error, "number of copies");
    CLI::App* cmd_converge =
        app.add_subcommand("converge", "per-n error exponents against the bound (CSV)");
    cmd_converge->add_option("--n", n_converge, "largest copy count");
    CLI::App* cmd_classical =
        app.add_subcommand("classical", "classical report for two distributions");
    cmd_classical->add_option("--n", n_classical, "largest copy count for the rows");
    cmd_classical->add_option("--priors", priors_spec, "prior weights w0,w1");
    CLI::App* cmd_nsmap =
        app.add_subcommand("nsmap", "embedded classical pair and identity residual");
    cmd_nsmap->add_option("--grid", grid, "number of interior s-grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ExperimentConfig cfg;
        if (!state0.empty()) cfg.state0_path = state0;
        if (!state1.empty()) cfg.state1_path = state1;
        for (const std::string& s : gen_specs) cfg.gens.push_back(parse_gen(s));
        if (!priors_spec.empty()) cfg.priors = parse_priors(priors_spec);
        cfg.eps_rank = eps_rank;
        cfg.grid = grid;
        cfg.n = n_error;

        if (cmd_qcb->parsed()) {
            emit(qchernoff::harness::run_qcb(cfg), out_path);
        } else if (cmd_error->parsed()) {
            emit(qchernoff::harness::run_error(cfg), out_path);
        } else if (cmd_converge->parsed()) {
            cfg.n_max = n_converge;
            const auto rep = qchernoff::harness::run_converge(cfg);
            emit(rep.csv, out_path);
            for (int n : rep.skipped) {
                std::cerr << "n=" << n << " exceeds the size cap; row skipped\n";
            }
            std::cout << rep.summary << '\n';
        } else if (cmd_classical->parsed()) {
            cfg.n_max = n_classical;
            emit(qchernoff::harness::run_classical(cfg), out_path);
        } else if (cmd_nsmap->parsed()) {
            emit(qchernoff::harness::run_nsmap(cfg), out_path);
        }
    } catch (const qchernoff::SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return 3;
    } catch (const qchernoff::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const qchernoff::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
