#pragma once

#include <cstddef>

namespace qchernoff {

// eps_rank separates numerical noise from a genuine kernel; it is relative to
// the largest eigenvalue magnitude and configurable per call. The others are
// library-wide defaults.
inline constexpr double kEpsRank = 1e-10;
inline constexpr double kEpsEig = 1e-10;
inline constexpr double kEpsComm = 1e-10;

// Row-dimension cap for kron/tensor powers. Overridable through the
// QCHERNOFF_SIZE_CAP environment variable, read once per process.
std::size_t size_cap();

// Cap on the number of type classes enumerated by product_min_error.
inline constexpr std::size_t kTypeClassCap = 20'000'000;

}  // namespace qchernoff
