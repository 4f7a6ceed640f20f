#pragma once

#include "isoprof/constants.hpp"

namespace isoprof {

/// Volume of the unit round n-sphere, n in [1, 4].
double unit_sphere_volume(int n);

/// A round sphere (S^n, scale * g0) described by the metric multiplier
/// applied to the unit round metric.
struct SphereSpec {
    int dimension;
    double scale;

    SphereSpec(int n, double lambda);

    double scalar_curvature() const { return dimension * (dimension - 1) / scale; }
    double total_volume() const;

    /// Sphere of given scalar curvature k: scale = n(n-1)/k.
    static SphereSpec from_scalar_curvature(int n, double k);
};

/// Geodesic ball described by its angle on the unit sphere before scaling.
struct GeodesicBall {
    SphereSpec sphere;
    double radius_angle;   // in [0, pi]
    double volume;
    double boundary_area;
};

/// Geodesic ball at angle r on a scaled round sphere (closed form for
/// n = 3, 4 via the integrals of sin^2, sin^3).
GeodesicBall geodesic_ball(const SphereSpec& s, double r);

/// Ball on S^3(3) = (S^3, 2 g0): volume 2^{5/2} pi (r - sin r cos r),
/// boundary area 8 pi sin^2 r.
GeodesicBall ball_s3_3(double r);

/// Ball on the scaled comparison 4-sphere (S^4, lambda2(eps) g0):
/// volume eps^2 (64 pi^2 / sqrt 3)(2 + cos r) sin^4(r/2),
/// boundary area 8 * 2^{1/4} 3^{3/8} pi^2 eps^{3/2} sin^3 r.
GeodesicBall ball_s4_scaled(double r, double eps = kDefaultEps);

/// Ball of prescribed volume, solved on the strictly increasing volume
/// branch r in [0, pi] to relative tolerance 1e-12 in r.
GeodesicBall ball_s3_3_at_volume(double volume);
GeodesicBall ball_s4_scaled_at_volume(double volume, double eps = kDefaultEps);

/// Yamabe constant of the round n-sphere, n >= 3: n(n-1) V_n^{2/n}.
double yamabe_constant_round_sphere(int n);

}  // namespace isoprof
