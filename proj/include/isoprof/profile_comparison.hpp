#pragma once

#include <cstddef>
#include <string>

#include "isoprof/certificate.hpp"
#include "isoprof/constants.hpp"
#include "isoprof/profile_curve.hpp"

namespace isoprof {

struct GridSpec {
    std::size_t points = 10000;
    bool log_spacing = true;
};

/// One profile-dominance question: lhs(v) >= scale_c * rhs(v) + margin on
/// [v_lo, v_hi], checked pointwise on a grid.
struct DominanceQuery {
    const ProfileCurve* lhs = nullptr;
    const ProfileCurve* rhs = nullptr;
    double scale_c = 1.0;
    double v_lo = 0.0;
    double v_hi = 0.0;
    GridSpec grid;
    double required_margin = 0.0;
    std::string id;
    std::string statement;
};

/// Floating-point slack below which a nonnegative margin still passes.
inline constexpr double kMarginSlack = 1e-9;

Certificate verify_dominance(const DominanceQuery& q);

/// Morgan's lower bound for product regions in S^2 x R^2:
/// (1/sqrt 2) inf { (v/sqrt x) sqrt(4 pi - x) + 2 sqrt(pi x v) : x in (0, 4 pi] }.
double morgan_product_bound(double v);
/// The minimizing x in (0, 4 pi] of the expression above.
double morgan_minimizer(double v);
/// g(x) = 4 sqrt(4 pi / x - 1) + 2 sqrt(pi x); g >= 4 pi with equality only
/// at x = 4 pi, which yields I_P(v) = 4 pi sqrt(v) for v >= 16.
double morgan_g(double x);

/// Chord between (v1, flat value of I_{S^3(3) x R}) and
/// (v2, (4 pi / sqrt 2) sqrt(v2)); lies below any concave profile through
/// points above both endpoints.
struct ChordBound {
    double v1, v2;
    double left_value, right_value;
    double slope;
    double evaluate(double v) const { return left_value + slope * (v - v1); }
};
ChordBound build_chord(double v1, double v2);

/// Checks l(v) >= c(eps) * I_{S^4 scaled}(v) on [chord.v1, total volume],
/// closing the tail analytically: once l passes c * (max sphere area) the
/// bound holds for every remaining volume.
Certificate verify_chord_dominates_sphere(const ChordBound& chord, double eps,
                                          std::size_t grid_points = 10000);

/// The full inequality chain for
/// I_{S^2 x R^2} >= (2 sqrt(eps)/12^{3/8}) I_{S^4 scaled}: series + grids +
/// Morgan + chord, with the cited theorems recorded as assumed steps.
CertificateSet verify_theorem_1_1(double eps = kDefaultEps, std::size_t grid_points = 10000);

}  // namespace isoprof
