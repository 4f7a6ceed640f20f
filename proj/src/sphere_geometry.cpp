#include "isoprof/sphere_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace isoprof {

double unit_sphere_volume(int n) {
    switch (n) {
        case 1: return 2.0 * kPi;
        case 2: return 4.0 * kPi;
        case 3: return 2.0 * kPi * kPi;
        case 4: return 8.0 * kPi * kPi / 3.0;
        default: throw std::domain_error("unit_sphere_volume: only n in [1,4] supported");
    }
}

SphereSpec::SphereSpec(int n, double lambda) : dimension(n), scale(lambda) {
    if (n < 2) throw std::domain_error("SphereSpec: dimension must be >= 2");
    if (!(lambda > 0)) throw std::domain_error("SphereSpec: scale must be positive");
}

double SphereSpec::total_volume() const {
    return std::pow(scale, dimension / 2.0) * unit_sphere_volume(dimension);
}

SphereSpec SphereSpec::from_scalar_curvature(int n, double k) {
    if (!(k > 0)) throw std::domain_error("SphereSpec: scalar curvature must be positive");
    return SphereSpec(n, n * (n - 1) / k);
}

namespace {

// int_0^r sin^(n-1), n = 3, 4
double sin_power_primitive(int n, double r) {
    switch (n) {
        case 3: return 0.5 * (r - std::sin(r) * std::cos(r));
        case 4: {
            const double c = std::cos(r);
            return 2.0 / 3.0 - c + c * c * c / 3.0;
        }
        default: throw std::domain_error("sin_power_primitive: unsupported dimension");
    }
}

void check_angle(double r) {
    if (!(r >= 0.0 && r <= kPi))
        throw std::domain_error("geodesic ball: angle must lie in [0, pi]");
}

}  // namespace

GeodesicBall geodesic_ball(const SphereSpec& s, double r) {
    check_angle(r);
    const int n = s.dimension;
    const double vn1 = unit_sphere_volume(n - 1);
    const double volume = std::pow(s.scale, n / 2.0) * vn1 * sin_power_primitive(n, r);
    const double area =
        std::pow(s.scale, (n - 1) / 2.0) * vn1 * std::pow(std::sin(r), n - 1);
    return GeodesicBall{s, r, volume, area};
}

GeodesicBall ball_s3_3(double r) {
    check_angle(r);
    const double volume = std::pow(2.0, 2.5) * kPi * (r - std::sin(r) * std::cos(r));
    const double s = std::sin(r);
    return GeodesicBall{SphereSpec(3, kLambda1), r, volume, 8.0 * kPi * s * s};
}

GeodesicBall ball_s4_scaled(double r, double eps) {
    check_angle(r);
    if (!(eps > 0)) throw std::domain_error("ball_s4_scaled: eps must be positive");
    const double sh = std::sin(0.5 * r);
    const double volume =
        eps * eps * (64.0 * kPi * kPi / std::sqrt(3.0)) * (2.0 + std::cos(r)) * std::pow(sh, 4);
    const double area = 8.0 * std::pow(2.0, 0.25) * std::pow(3.0, 3.0 / 8.0) * kPi * kPi *
                        std::pow(eps, 1.5) * std::pow(std::sin(r), 3);
    return GeodesicBall{SphereSpec(4, lambda2(eps)), r, volume, area};
}

namespace {

// Solve volume(r) = v on the increasing branch r in [0, pi].
template <class Ball>
GeodesicBall invert_ball(double v, double total, Ball&& ball_at) {
    if (!(v >= 0.0 && v <= total))
        throw std::out_of_range("ball volume outside [0, total volume]");
    if (v == 0.0) return ball_at(0.0);
    if (v == total) return ball_at(kPi);
    const double r = find_root_newton(
        [&](double t) { return ball_at(t).volume - v; },
        [&](double t) {
            // dV/dr = boundary_area * sqrt(scale): geodesic length is sqrt(scale)*r
            const GeodesicBall b = ball_at(t);
            return b.boundary_area * std::sqrt(b.sphere.scale);
        },
        0.0, kPi, std::cbrt(v / total) * kPi, 1e-12);
    return ball_at(r);
}

}  // namespace

GeodesicBall ball_s3_3_at_volume(double volume) {
    const double total = std::pow(2.0, 2.5) * kPi * kPi;
    return invert_ball(volume, total, [](double r) { return ball_s3_3(r); });
}

GeodesicBall ball_s4_scaled_at_volume(double volume, double eps) {
    const double total = eps * eps * 64.0 * kPi * kPi / std::sqrt(3.0);
    return invert_ball(volume, total, [eps](double r) { return ball_s4_scaled(r, eps); });
}

double yamabe_constant_round_sphere(int n) {
    if (n < 3) throw std::domain_error("yamabe_constant_round_sphere: need n >= 3");
    return n * (n - 1) * std::pow(unit_sphere_volume(n), 2.0 / n);
}

}  // namespace isoprof
