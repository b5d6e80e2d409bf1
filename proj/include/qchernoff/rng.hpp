#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace qchernoff {

// Deterministic random source. Variates are derived from raw mt19937_64
// output with explicit arithmetic, so streams are reproducible across
// platforms and standard libraries (std::normal_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in (0, 1]
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
    }

    // standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(kTwoPi * v);
        have_spare_ = true;
        return r * std::cos(kTwoPi * v);
    }

    // standard complex normal, E|z|^2 = 1
    std::complex<double> complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re * kInvSqrt2, im * kInvSqrt2};
    }

    // integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;
    static constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qchernoff
