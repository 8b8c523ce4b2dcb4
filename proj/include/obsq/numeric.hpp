#pragma once

#include <cmath>
#include <complex>

namespace obsq {

using Complex = std::complex<double>;

// Default width for all validation checks (norm sums, unitarity, separability).
// Every check that uses it also accepts an explicit tolerance argument.
inline constexpr double kDefaultTolerance = 1e-9;

inline bool nearly_equal(double a, double b, double tol = kDefaultTolerance) {
  return std::abs(a - b) <= tol;
}

inline double abs_sq(Complex z) { return std::norm(z); }

}  // namespace obsq
