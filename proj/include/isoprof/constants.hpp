#pragma once

#include <cmath>

#include "isoprof/numerics.hpp"

namespace isoprof {

/// Tuning constant entering the S^4 metric scale; (1.047)^2 gives the best
/// lower bound for the Yamabe comparison.
inline constexpr double kDefaultEps = 1.047 * 1.047;

/// Metric scale of the 3-sphere factor: (S^3, 2 g0) has scalar curvature 3.
inline constexpr double kLambda1 = 2.0;

/// Metric scale of the comparison 4-sphere, lambda2 = 2^{3/2} 3^{1/4} eps.
inline double lambda2(double eps) {
    return std::pow(2.0, 1.5) * std::pow(3.0, 0.25) * eps;
}

/// Profile comparison constant c = 2 sqrt(eps) / 12^{3/8} (about 0.825).
inline double comparison_constant(double eps) {
    return 2.0 * std::sqrt(eps) / std::pow(12.0, 3.0 / 8.0);
}

/// Yamabe-bound constant c^2 = sqrt(2) eps / 3^{3/4} (about 0.68).
inline double yamabe_bound_constant(double eps) {
    return std::sqrt(2.0) * eps / std::pow(3.0, 0.75);
}

/// Flat (cylindrical-section) value of the S^2 x R profile.
inline const double kFlatAreaS2xR = 8.0 * kPi;

/// Flat value of the S^3(3) x R profile, 8 sqrt(2) pi^2 = 2 Vol(S^3(3)).
inline const double kFlatAreaS3xR = 8.0 * std::sqrt(2.0) * kPi * kPi;

}  // namespace isoprof
