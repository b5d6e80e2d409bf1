#pragma once

#include <string>

#include "qchernoff/classical.hpp"
#include "qchernoff/states.hpp"

namespace qchernoff {

// 17 significant digits; infinities become the literal tokens inf/-inf
std::string fmt_g17(double x);

// double as a JSON value: finite numbers plain, non-finite quoted ("-inf")
std::string json_number(double x);

// State file: {"dim": d, "matrix": [[[re,im],...],...]}, row-major, one
// [re,im] pair per entry. The matrix must be Hermitian up to 1e-8 and pass
// the density validation.
DensityMatrix load_state_json(const std::string& path);
DensityMatrix parse_state_json(const std::string& text);
std::string state_to_json(const DensityMatrix& rho);

// Distribution file: {"probs":[...]} with exact zeros allowed.
DiscreteDistribution load_distribution_json(const std::string& path);
DiscreteDistribution parse_distribution_json(const std::string& text);
std::string distribution_to_json(const DiscreteDistribution& p);

}  // namespace qchernoff
