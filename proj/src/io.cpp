#include "qchernoff/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qchernoff {

std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_number(double x) {
    if (std::isfinite(x)) return fmt_g17(x);
    return "\"" + fmt_g17(x) + "\"";
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse_or_throw(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON input");
    return j;
}

}  // namespace

DensityMatrix parse_state_json(const std::string& text) {
    const nlohmann::json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("matrix")) {
        throw ValidationError("state file must be {\"dim\": d, \"matrix\": [...]}");
    }
    if (!j["dim"].is_number_integer()) throw ValidationError("state dim must be an integer");
    const int d = j["dim"].get<int>();
    if (d < 1) throw ValidationError("state dim must be positive");
    const auto& rows = j["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
        throw ValidationError("state matrix must have dim rows");
    }
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw ValidationError("state matrix row " + std::to_string(i) +
                                  " must have dim entries");
        }
        for (int k = 0; k < d; ++k) {
            const auto& entry = row[static_cast<std::size_t>(k)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw ValidationError("state matrix entries must be [re, im] pairs");
            }
            m(i, k) = cplx(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    double herm_dev = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int k = i; k < d; ++k) {
            herm_dev = std::max(herm_dev, std::abs(m(i, k) - std::conj(m(k, i))));
        }
    }
    if (herm_dev > 1e-8) {
        throw ValidationError("state matrix is not Hermitian (deviation " +
                              fmt_g17(herm_dev) + ")");
    }
    return validate_density(HermitianMatrix(std::move(m)));
}

DensityMatrix load_state_json(const std::string& path) {
    return parse_state_json(slurp(path));
}

std::string state_to_json(const DensityMatrix& rho) {
    std::ostringstream out;
    const int d = rho.dim();
    out << "{\"dim\": " << d << ", \"matrix\": [";
    for (int i = 0; i < d; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < d; ++j) {
            const cplx z = rho.matrix()(i, j);
            out << (j ? ", [" : "[") << fmt_g17(z.real()) << ", " << fmt_g17(z.imag())
                << "]";
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

DiscreteDistribution parse_distribution_json(const std::string& text) {
    const nlohmann::json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("probs") || !j["probs"].is_array()) {
        throw ValidationError("distribution file must be {\"probs\": [...]}");
    }
    std::vector<double> p;
    p.reserve(j["probs"].size());
    for (const auto& v : j["probs"]) {
        if (!v.is_number()) throw ValidationError("probs entries must be numbers");
        p.push_back(v.get<double>());
    }
    return DiscreteDistribution(std::move(p));
}

DiscreteDistribution load_distribution_json(const std::string& path) {
    return parse_distribution_json(slurp(path));
}

std::string distribution_to_json(const DiscreteDistribution& p) {
    std::ostringstream out;
    out << "{\"probs\": [";
    for (int x = 0; x < p.size(); ++x) {
        out << (x ? ", " : "") << fmt_g17(p[x]);
    }
    out << "]}";
    return out.str();
}

}  // namespace qchernoff
