#include "isoprof/cylinder_profiles.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoprof/sphere_geometry.hpp"

namespace isoprof {

namespace {

// int_0^y sin^(n-1), stable for small y
double sin_primitive(int n, double y) {
    if (n == 2) {
        const double s = std::sin(0.5 * y);
        return 2.0 * s * s;  // 1 - cos(y)
    }
    // n == 3: (y - sin y cos y)/2 cancels badly for small y
    if (y < 0.05) {
        const double y2 = y * y;
        return y * y2 *
               (1.0 / 3 + y2 * (-1.0 / 15 + y2 * (2.0 / 315 + y2 * (-1.0 / 2835 + y2 * 2.0 / 155925))));
    }
    return 0.5 * (y - std::sin(y) * std::cos(y));
}

void check_n(int n) {
    if (n != 2 && n != 3) throw std::domain_error("cylinder profiles: n must be 2 or 3");
}

void check_eta(double eta) {
    if (!(eta > 0.0 && eta < kPi))
        throw std::domain_error("cylinder profiles: eta must lie in (0, pi)");
}

}  // namespace

double mean_curvature(int n, double eta) {
    check_n(n);
    check_eta(eta);
    if (n == 2) return std::cos(0.5 * eta) / std::sin(0.5 * eta);
    const double s = std::sin(eta);
    return s * s / sin_primitive(3, eta);
}

double u_ratio(int n, double eta, double y) {
    check_n(n);
    check_eta(eta);
    if (y < 0.0 || y > eta) throw std::domain_error("u_ratio: need 0 <= y <= eta");
    if (y == 0.0) return 0.0;  // continuous extension, h_{n-1}(y) -> infinity
    if (y == eta) return 1.0;
    return mean_curvature(n, eta) / mean_curvature(n, y);
}

BallRegion ball_region_integral(int n, double eta) {
    check_n(n);
    check_eta(eta);
    const double h_eta = mean_curvature(n, eta);
    const double vn1 = unit_sphere_volume(n - 1);

    const auto u_of = [&](double y) { return h_eta / mean_curvature(n, y); };
    // y = eta sin(pi tau / 2) turns the 1/sqrt(eta - y) endpoint singularity
    // into a smooth integrand of tau on [0, 1]
    const auto substituted = [&](auto&& g) {
        return [&, g](double tau) {
            const double y = eta * std::sin(0.5 * kPi * tau);
            const double jac = eta * 0.5 * kPi * std::cos(0.5 * kPi * tau);
            return g(y) * jac;
        };
    };
    const auto inv_root = [&](double y) {
        const double u = u_of(y);
        const double t2 = std::max((1.0 - u) * (1.0 + u), 1e-30);
        return 1.0 / std::sqrt(t2);
    };

    const double area = 2.0 * vn1 *
                        integrate(substituted([&](double y) {
                                      return std::pow(std::sin(y), n - 1) * inv_root(y);
                                  }),
                                  0.0, 1.0, 1e-13);
    const double volume = 2.0 * vn1 *
                          integrate(substituted([&](double y) {
                                        return sin_primitive(n, y) * u_of(y) * inv_root(y);
                                    }),
                                    0.0, 1.0, 1e-13);
    return BallRegion{n, eta, h_eta, volume, area};
}

BallRegion ball_region_closed_n2(double h) {
    if (!(h > 0.0)) throw std::domain_error("ball_region_closed_n2: h must be positive");
    const double q = 1.0 + h * h;
    const double rq = std::sqrt(q);
    // log((rq+1)/(rq-1)) rewritten to avoid cancellation for small h
    const double big_l = 2.0 * std::log((rq + 1.0) / h);
    const double area = 4.0 * kPi * (2.0 / q + h * h / (q * rq) * big_l);
    const double volume = 4.0 * kPi * h * ((2.0 + h * h) / (q * rq) * big_l - 2.0 / q);
    const double eta = 2.0 * std::atan(1.0 / h);
    return BallRegion{2, eta, h, volume, area};
}

double closed_area_n2_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("closed_area_n2_x: x must be positive");
    const double q = 1.0 + x * x;
    return 4.0 * kPi * (2.0 * x * x / q + 2.0 * x * std::asinh(x) / (q * std::sqrt(q)));
}

double closed_volume_n2_x(double x) {
    if (!(x > 0.0)) throw std::domain_error("closed_volume_n2_x: x must be positive");
    const double q = 1.0 + x * x;
    return 4.0 * kPi *
           (2.0 * (2.0 * x * x + 1.0) * std::asinh(x) / (q * std::sqrt(q)) - 2.0 * x / q);
}

double closed_volume_n2_x_derivative(double x) {
    const double q = 1.0 + x * x;
    return 4.0 * kPi *
           (2.0 * x * (1.0 - 2.0 * x * x) * std::asinh(x) / (q * q * std::sqrt(q)) +
            6.0 * x * x / (q * q));
}

namespace {

// ---- n = 2 threshold (closed forms) -------------------------------------

struct N2Data {
    double eta0, h0, x_cap, v_threshold;
};

const N2Data& n2_data() {
    static const N2Data data = [] {
        // boundary area is increasing in eta well past the threshold; scan
        // for a bracket then solve area(eta) = 8 pi
        const auto area_of_eta = [](double eta) {
            return ball_region_closed_n2(mean_curvature(2, eta)).boundary_area;
        };
        double lo = 1.0, hi = 0.0;
        for (double eta = 1.2; eta < 2.6; eta += 0.1) {
            if (area_of_eta(eta) >= kFlatAreaS2xR) {
                hi = eta;
                break;
            }
            lo = eta;
        }
        if (hi == 0.0) throw NumericError("n2 threshold: no bracket found");
        const double eta0 =
            find_root([&](double eta) { return area_of_eta(eta) - kFlatAreaS2xR; }, lo, hi, 1e-14);
        N2Data d;
        d.eta0 = eta0;
        d.h0 = mean_curvature(2, eta0);
        d.x_cap = 1.0 / d.h0;
        d.v_threshold = closed_volume_n2_x(d.x_cap);
        return d;
    }();
    return data;
}

// ---- n = 3 family (quadrature-backed table) ------------------------------

// Interpolates V(x)/x^4 and A(x)/x^3, which stay O(1) down to x = 0 where
// the region degenerates to a Euclidean 4-ball: V ~ (pi^2/2) x^4,
// A ~ 2 pi^2 x^3.
struct N3Family {
    double x0 = 0.0;        // threshold parameter: A(x0) = 4 pi^2
    double v0_unscaled = 0.0;
    InterpolationTable rv, ra;

    double volume(double x) const { return x <= 0.0 ? 0.0 : rv.value(x) * x * x * x * x; }
    double area(double x) const { return x <= 0.0 ? 0.0 : ra.value(x) * x * x * x; }
    double volume_derivative(double x) const {
        return rv.derivative(x) * x * x * x * x + 4.0 * rv.value(x) * x * x * x;
    }
    double x_at_volume(double v) const {
        if (!(v > 0.0 && v <= v0_unscaled + 1e-9))
            throw std::out_of_range("n3 family: volume outside parametric branch");
        const double guess = std::pow(v / (0.5 * kPi * kPi), 0.25);
        return find_root_newton([&](double x) { return volume(x) - v; },
                                [&](double x) { return volume_derivative(x); }, 0.0, x0,
                                std::min(guess, 0.9 * x0), 1e-13);
    }
};

const N3Family& n3_family() {
    static const N3Family fam = [] {
        const double target = 4.0 * kPi * kPi;  // = kFlatAreaS3xR / 2^{3/2}
        const auto area_of = [](double x) { return ball_region_integral(3, x).boundary_area; };
        double lo = 1.0, hi = 0.0;
        for (double x = 1.2; x < 2.6; x += 0.1) {
            if (area_of(x) >= target) {
                hi = x;
                break;
            }
            lo = x;
        }
        if (hi == 0.0) throw NumericError("n3 threshold: no bracket found");
        N3Family f;
        f.x0 = find_root([&](double x) { return area_of(x) - target; }, lo, hi, 1e-13);

        const std::size_t n_nodes = 1601;
        std::vector<double> xs(n_nodes), rvs(n_nodes), ras(n_nodes);
        for (std::size_t i = 0; i < n_nodes; ++i)
            xs[i] = f.x0 * static_cast<double>(i) / static_cast<double>(n_nodes - 1);
        rvs[0] = 0.5 * kPi * kPi;  // Euclidean 4-ball limits
        ras[0] = 2.0 * kPi * kPi;
        for (std::size_t i = 1; i < n_nodes; ++i) {
            const BallRegion b = ball_region_integral(3, xs[i]);
            rvs[i] = b.volume / std::pow(xs[i], 4);
            ras[i] = b.boundary_area / std::pow(xs[i], 3);
        }
        f.rv = InterpolationTable(xs, rvs);
        f.ra = InterpolationTable(xs, ras);
        f.v0_unscaled = f.volume(f.x0);

        // the parametric branch must be strictly monotone for inversion
        double prev_v = 0.0, prev_a = 0.0;
        for (std::size_t i = 1; i < n_nodes; ++i) {
            const double v = f.volume(xs[i]), a = f.area(xs[i]);
            if (!(v > prev_v) || !(a > prev_a))
                throw NumericError("n3 family: non-monotone table");
            prev_v = v;
            prev_a = a;
        }
        return f;
    }();
    return fam;
}

}  // namespace

double pedrosa_n3_volume(double x) {
    if (x == 0.0) return 0.0;
    check_eta(x);
    const N3Family& f = n3_family();
    if (x <= f.x0) return f.volume(x);
    return ball_region_integral(3, x).volume;
}

double pedrosa_n3_area(double x) {
    if (x == 0.0) return 0.0;
    check_eta(x);
    const N3Family& f = n3_family();
    if (x <= f.x0) return f.area(x);
    return ball_region_integral(3, x).boundary_area;
}

FlattenThreshold flatten_threshold(int n) {
    check_n(n);
    if (n == 2) {
        const N2Data& d = n2_data();
        return FlattenThreshold{d.eta0, d.h0, d.v_threshold, kFlatAreaS2xR};
    }
    const N3Family& f = n3_family();
    return FlattenThreshold{f.x0, mean_curvature(3, f.x0), 4.0 * f.v0_unscaled, kFlatAreaS3xR};
}

ProfileCurve profile_s2xR() {
    const N2Data d = n2_data();
    auto eval = [d](double v) -> ProfileSample {
        if (v >= d.v_threshold) return {v, kFlatAreaS2xR, d.eta0, true};
        const double guess = std::cbrt(3.0 * v / (32.0 * kPi));
        const double x = find_root_newton([&](double t) { return closed_volume_n2_x(t) - v; },
                                          [&](double t) { return closed_volume_n2_x_derivative(t); },
                                          0.0, d.x_cap, std::min(guess, 0.9 * d.x_cap), 1e-13);
        return {v, closed_area_n2_x(x), 2.0 * std::atan(x), false};
    };
    ProfileCurve curve("I_{S^2 x R}", "eta", eval, 0.0,
                       std::numeric_limits<double>::infinity());
    curve.flat_cap = {{d.v_threshold, kFlatAreaS2xR}};
    return curve;
}

ProfileCurve profile_s3_3xR() {
    const N3Family& f = n3_family();
    const double v0 = 4.0 * f.v0_unscaled;
    const double area_mult = std::pow(2.0, 1.5);
    auto eval = [&f, v0, area_mult](double v) -> ProfileSample {
        if (v >= v0) return {v, kFlatAreaS3xR, f.x0, true};
        const double x = f.x_at_volume(v / 4.0);
        return {v, area_mult * f.area(x), x, false};
    };
    ProfileCurve curve("I_{S^3(3) x R}", "x", eval, 0.0,
                       std::numeric_limits<double>::infinity());
    curve.flat_cap = {{v0, kFlatAreaS3xR}};
    curve.volume_multiplier = 4.0;
    curve.area_multiplier = area_mult;
    return curve;
}

namespace {

ProfileCurve sphere_profile(std::string label, double total,
                            std::function<GeodesicBall(double)> at_volume) {
    auto eval = [total, at_volume](double v) -> ProfileSample {
        if (v >= total) return {v, 0.0, kPi, false};
        const GeodesicBall b = at_volume(v);
        return {v, b.boundary_area, b.radius_angle, false};
    };
    ProfileCurve curve(std::move(label), "r", eval, 0.0, total);
    curve.total_volume = total;
    return curve;
}

}  // namespace

ProfileCurve profile_s3_3() {
    const double total = std::pow(2.0, 2.5) * kPi * kPi;
    return sphere_profile("I_{S^3(3)}", total,
                          [](double v) { return ball_s3_3_at_volume(v); });
}

ProfileCurve profile_s4_scaled(double eps) {
    const double total = eps * eps * 64.0 * kPi * kPi / std::sqrt(3.0);
    return sphere_profile("I_{S^4 scaled}", total,
                          [eps](double v) { return ball_s4_scaled_at_volume(v, eps); });
}

}  // namespace isoprof
