#pragma once

#include <utility>

#include "isoprof/certificate.hpp"
#include "isoprof/constants.hpp"
#include "isoprof/series.hpp"

namespace isoprof {

/// Small-volume Taylor data, exact over Q(sqrt 2).  All series are the
/// target function divided by pi; x is the small-volume variable (1/h on
/// the cylinder side, the substitution parameter on the sphere side).
struct SmallVolumeSeries {
    PowerSeries cyl_area;     // A(x):  boundary area of the n = 2 ball family
    PowerSeries cyl_volume;   // V(x)
    PowerSeries sph_area_r;   // a(r) = 8 sin^2 r              (argument r)
    PowerSeries sph_volume_r; // v(r) = 2^{5/2} (r - sin r cos r)
    PowerSeries substitution; // r(x) = sqrt2 x - (2/5) sqrt2 x^3 + (11/10) x^5
    PowerSeries sph_area_x;   // a(r(x))
    PowerSeries sph_volume_x; // v(r(x))
};

/// Recomputes every expansion from the closed forms by truncated power
/// series arithmetic at the given order (>= 10).
SmallVolumeSeries small_volume_series(int order);

/// Certified enclosures on (0, 0.2].  First: A(x) as a lower-bound
/// polynomial (9th derivative positive).  Second: V(x) as a two-sided
/// enclosure with remainder 83 x^10 (from V^(10) < 3e8 and 3e8/10! < 83).
std::pair<BoundedPolynomial, BoundedPolynomial> series_A_V_n2();

/// Sphere-side enclosures on (0, 0.2].  First: a(x) two-sided with
/// remainder 193 x^9 (from a^(9) < 7e7, 7e7/9! < 193).  Second: v(x) as a
/// lower-bound polynomial (10th derivative positive).
std::pair<BoundedPolynomial, BoundedPolynomial> series_sphere_side();

/// Exact evaluation of the sphere-side closed forms through the fixed
/// substitution polynomial r(x).
double closed_sph_area_x(double x);
double closed_sph_volume_x(double x);

struct SmallVolumeS2xRReport {
    double coeff_margin;       // 1e-12 minus the worst printed-coefficient error
    double gap_area_margin;    // min over (0,0.2] of (A_low - a_up)/x^4 - 3
    double gap_volume_margin;  // min over (0,0.2] of (v_low - V_up)/x^7 - 51
    double v02_margin;         // V(0.2) - 0.25, closed form
    double worst_x;            // location of the weakest gap margin
    bool pass;
};
SmallVolumeS2xRReport small_volume_s2xR_report();

/// Certifies the profile dominance I_{S^2 x R}(t) > I_{S^3(3)}(t) for
/// t < 0.25 from the certified polynomial gaps A - a > 3 x^4 and
/// v - V > 51 x^7 plus V(0.2) > 0.25.
Certificate certify_small_volume_s2xR();

struct SmallVolumeS3xRReport {
    double anchor_volume_margin;  // 15 - 4 V(1)
    double anchor_area_margin;    // 2^{3/2} A(1) - 39
    double ratio_at_15_margin;    // 2^{3/2} A(1) / 15^{3/4} - 5
    double limit_margin;          // 6 - 2^{7/4} sqrt(pi)
    double constant_margin;       // 5/6 - c(eps)
    bool pass;
};
SmallVolumeS3xRReport small_volume_s3xR_report(double eps);

/// Certifies c * I_{S^4 scaled}(v) < I_{S^3(3) x R}(v) for v <= 15 from the
/// anchors 4V(1) < 15, 2^{3/2}A(1) > 39, the small-volume limit
/// 2^{7/4} sqrt(pi) < 6, and c < 5/6, invoking the monotone-ratio theorem
/// for both profiles.
Certificate certify_small_volume_s3xR(double eps = kDefaultEps);

/// Supporting evidence for the derivative hypotheses, estimated from
/// high-order series (order ~26) on (0, 0.2]; directly differencing the
/// closed forms at order 9-10 would be pure rounding noise.
struct DerivativeBoundsReport {
    double min_cyl_area_d9;    // A^(9), claimed positive
    double max_cyl_volume_d10; // V^(10), claimed < 3e8
    double max_sph_area_d9;    // a^(9), claimed < 7e7
    double min_sph_volume_d10; // v^(10), claimed positive
    bool consistent;
};
DerivativeBoundsReport derivative_bounds_report();

}  // namespace isoprof
