#pragma once

#include "isoprof/constants.hpp"
#include "isoprof/profile_curve.hpp"

namespace isoprof {

/// Ball-type region in S^n x R whose boundary has constant mean curvature h
/// and whose sections are geodesic balls of radius up to eta.
struct BallRegion {
    int n;         // sphere-factor dimension (2 or 3)
    double eta;    // maximal section radius, in (0, pi)
    double h;      // mean curvature h_{n-1}(eta)
    double volume;
    double boundary_area;
};

/// h_{n-1}(eta) = sin^{n-1}(eta) / int_0^eta sin^{n-1}(s) ds, n in {2, 3}.
/// Strictly decreasing in eta; for n = 2 this is cot(eta/2).
double mean_curvature(int n, double eta);

/// u_{n-1}(eta, y) = h_{n-1}(eta) / h_{n-1}(y) in (0, 1]; equals 1 iff
/// y = eta.  Extended continuously by 0 at y = 0.
double u_ratio(int n, double eta, double y);

/// Boundary area and volume of the ball-type region by direct quadrature.
/// The area integrand has an inverse-square-root singularity at y = eta;
/// the substitution y = eta sin(pi tau / 2) absorbs it, leaving a smooth
/// integrand for the adaptive rule.  Relative accuracy ~1e-10.
BallRegion ball_region_integral(int n, double eta);

/// Closed forms for n = 2 as functions of the mean curvature h > 0.
BallRegion ball_region_closed_n2(double h);

/// Same closed forms reparametrized by x = 1/h (the small-volume variable).
double closed_area_n2_x(double x);
double closed_volume_n2_x(double x);
/// d/dx of the closed n = 2 volume.
double closed_volume_n2_x_derivative(double x);

/// Where a profile flattens: boundary area of the ball family reaches the
/// cylindrical-section value.  For n = 2 the fields are (eta0, h0, V(eta0),
/// 8 pi); for n = 3 the family is reported in the scaled S^3(3) x R
/// normalization: (x0, h(x0), 4 V(x0), 8 sqrt(2) pi^2).
struct FlattenThreshold {
    double eta0;
    double h0;
    double v_threshold;
    double flat_area;
};
FlattenThreshold flatten_threshold(int n);

/// Assembled profiles.  Both are nondecreasing up to their flat cap and
/// constant after it; evaluation inverts the volume parametrization.
ProfileCurve profile_s2xR();
ProfileCurve profile_s3_3xR();

/// Geodesic-ball profiles of the two comparison spheres, defined for all
/// v > 0 (zero past the total volume, where no region exists).
ProfileCurve profile_s3_3();
ProfileCurve profile_s4_scaled(double eps = kDefaultEps);

/// Direct access to the quadrature-backed n = 3 family (unscaled;
/// the S^3(3) x R profile multiplies volume by 4 and area by 2^{3/2}).
double pedrosa_n3_volume(double x);
double pedrosa_n3_area(double x);

}  // namespace isoprof
