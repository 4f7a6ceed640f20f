#include "isoprof/series_certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "isoprof/cylinder_profiles.hpp"

namespace isoprof {

namespace {

using QR = QuadraticRational;

PowerSeries substitution_polynomial(int order) {
    PowerSeries r(order);
    r.set_coeff(1, QR::sqrt2_multiple(Rational(1)));
    r.set_coeff(3, QR::sqrt2_multiple(Rational(-2, 5)));
    r.set_coeff(5, QR::rational(Rational(11, 10)));
    return r;
}

}  // namespace

SmallVolumeSeries small_volume_series(int order) {
    if (order < 10) throw std::invalid_argument("small_volume_series: order must be >= 10");
    const PowerSeries x = PowerSeries::variable(order);
    const PowerSeries x2 = x * x;

    // closed forms divided by pi:
    //   A(x) = 8 x^2 (1+x^2)^-1 + 8 x asinh(x) (1+x^2)^-3/2
    //   V(x) = 8 (2x^2+1) asinh(x) (1+x^2)^-3/2 - 8 x (1+x^2)^-1
    const PowerSeries inv_q = PowerSeries::binomial_power(Rational(-1), x2);
    const PowerSeries inv_q32 = PowerSeries::binomial_power(Rational(-3, 2), x2);
    const PowerSeries ash = PowerSeries::asinh(order);

    const PowerSeries cyl_area =
        (x2 * inv_q).scaled(QR::rational(8)) + (x * ash * inv_q32).scaled(QR::rational(8));
    const PowerSeries two_x2_plus_1 = x2.scaled(QR::rational(2)) + PowerSeries::constant(order, QR::rational(1));
    const PowerSeries cyl_volume = (two_x2_plus_1 * ash * inv_q32).scaled(QR::rational(8)) -
                                   (x * inv_q).scaled(QR::rational(8));

    // sphere side, argument r:  a(r)/pi = 4 (1 - cos 2r),
    //                           v(r)/pi = 4 sqrt2 r - 2 sqrt2 sin 2r
    const PowerSeries two_r = x.scaled(QR::rational(2));
    const PowerSeries cos2r = PowerSeries::cos(order).compose(two_r);
    const PowerSeries sin2r = PowerSeries::sin(order).compose(two_r);
    const PowerSeries sph_area_r =
        (PowerSeries::constant(order, QR::rational(1)) - cos2r).scaled(QR::rational(4));
    const PowerSeries sph_volume_r =
        x.scaled(QR::sqrt2_multiple(Rational(4))) - sin2r.scaled(QR::sqrt2_multiple(Rational(2)));

    const PowerSeries sub = substitution_polynomial(order);
    return SmallVolumeSeries{cyl_area,
                             cyl_volume,
                             sph_area_r,
                             sph_volume_r,
                             sub,
                             sph_area_r.compose(sub),
                             sph_volume_r.compose(sub)};
}

namespace {

// the printed expansions; certificates evaluate these exact coefficients
BoundedPolynomial printed_cyl_area() {
    BoundedPolynomial p;
    p.terms = {{2, QR::rational(16)},
               {4, QR::rational(Rational(-64, 3))},
               {6, QR::rational(Rational(128, 5))},
               {8, QR::rational(Rational(-1024, 35))}};
    p.direction = BoundDirection::lower;  // A^(9) > 0 on (0, 0.2)
    p.remainder_power = 9;
    p.remainder_constant = 0.0;
    return p;
}

BoundedPolynomial printed_cyl_volume() {
    BoundedPolynomial p;
    p.terms = {{3, QR::rational(Rational(32, 3))},
               {5, QR::rational(Rational(-256, 15))},
               {7, QR::rational(Rational(768, 35))},
               {9, QR::rational(Rational(-8192, 315))}};
    p.direction = BoundDirection::two_sided;  // |V^(10)| < 3e8, 3e8/10! < 83
    p.remainder_power = 10;
    p.remainder_constant = 83.0;
    return p;
}

BoundedPolynomial printed_sph_area() {
    BoundedPolynomial p;
    p.terms = {{2, QR::rational(16)},
               {4, QR::rational(Rational(-352, 15))},
               {6, QR(Rational(5056, 225), Rational(88, 5))},
               {8, QR(Rational(-5504, 315), Rational(-2288, 75))}};
    p.direction = BoundDirection::two_sided;  // |a^(9)| < 7e7, 7e7/9! < 193
    p.remainder_power = 9;
    p.remainder_constant = 193.0;
    return p;
}

BoundedPolynomial printed_sph_volume() {
    BoundedPolynomial p;
    p.terms = {{3, QR::rational(Rational(32, 3))},
               {5, QR::rational(Rational(-256, 15))},
               {7, QR(Rational(22784, 1575), Rational(88, 5))},
               {9, QR(Rational(-699904, 70875), Rational(-1936, 75))}};
    p.direction = BoundDirection::lower;  // v^(10) > 0 on (0, 0.2)
    p.remainder_power = 10;
    p.remainder_constant = 0.0;
    return p;
}

// worst relative mismatch between a recomputed series and printed terms
double coefficient_error(const PowerSeries& s, const BoundedPolynomial& printed) {
    double worst = 0.0;
    for (const auto& [power, coeff] : printed.terms) {
        const double want = coeff.to_double();
        const double got = s.coeff(power).to_double();
        worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
        if (!(s.coeff(power) == coeff)) worst = std::max(worst, 1e-15);
    }
    return worst;
}

}  // namespace

std::pair<BoundedPolynomial, BoundedPolynomial> series_A_V_n2() {
    return {printed_cyl_area(), printed_cyl_volume()};
}

std::pair<BoundedPolynomial, BoundedPolynomial> series_sphere_side() {
    return {printed_sph_area(), printed_sph_volume()};
}

namespace {

double substitution_r(double x) {
    const double s2 = std::sqrt(2.0);
    return s2 * x - 0.4 * s2 * x * x * x + 1.1 * x * x * x * x * x;
}

}  // namespace

double closed_sph_area_x(double x) {
    const double s = std::sin(substitution_r(x));
    return 8.0 * kPi * s * s;
}

double closed_sph_volume_x(double x) {
    const double r = substitution_r(x);
    return std::pow(2.0, 2.5) * kPi * (r - std::sin(r) * std::cos(r));
}

SmallVolumeS2xRReport small_volume_s2xR_report() {
    const SmallVolumeSeries s = small_volume_series(12);
    const auto [area_cyl, vol_cyl] = series_A_V_n2();
    const auto [area_sph, vol_sph] = series_sphere_side();

    double coeff_err = 0.0;
    coeff_err = std::max(coeff_err, coefficient_error(s.cyl_area, area_cyl));
    coeff_err = std::max(coeff_err, coefficient_error(s.cyl_volume, vol_cyl));
    coeff_err = std::max(coeff_err, coefficient_error(s.sph_area_x, area_sph));
    coeff_err = std::max(coeff_err, coefficient_error(s.sph_volume_x, vol_sph));

    SmallVolumeS2xRReport rep{};
    rep.coeff_margin = 1e-12 - coeff_err;

    // the gap margins are dominated at the right endpoint; the dense scan
    // is a guard against an interior dip
    const auto compiled = [](const BoundedPolynomial& p) {
        std::vector<std::pair<int, double>> t;
        for (const auto& [pw, c] : p.terms) t.emplace_back(pw, c.to_double() * kPi);
        return t;
    };
    const auto poly_at = [](const std::vector<std::pair<int, double>>& t, double x) {
        double acc = 0.0;
        for (const auto& [pw, c] : t) acc += c * std::pow(x, pw);
        return acc;
    };
    const auto ca = compiled(area_cyl), cv = compiled(vol_cyl);
    const auto sa = compiled(area_sph), sv = compiled(vol_sph);

    const std::size_t n = 10000;
    double gap_area = std::numeric_limits<double>::infinity();
    double gap_volume = std::numeric_limits<double>::infinity();
    rep.worst_x = 0.2;
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = 0.2 * static_cast<double>(i) / static_cast<double>(n);
        const double a_low = poly_at(ca, x);
        const double a_up = poly_at(sa, x) + 193.0 * std::pow(x, 9);
        const double v_low = poly_at(sv, x);
        const double v_up = poly_at(cv, x) + 83.0 * std::pow(x, 10);
        const double ga = (a_low - a_up) / std::pow(x, 4) - 3.0;
        const double gv = (v_low - v_up) / std::pow(x, 7) - 51.0;
        if (ga < gap_area) gap_area = ga;
        if (gv < gap_volume) {
            gap_volume = gv;
            rep.worst_x = x;
        }
    }
    rep.gap_area_margin = gap_area;
    rep.gap_volume_margin = gap_volume;
    rep.v02_margin = closed_volume_n2_x(0.2) - 0.25;
    rep.pass = rep.coeff_margin > 0 && rep.gap_area_margin > 0 && rep.gap_volume_margin > 0 &&
               rep.v02_margin > 0;
    return rep;
}

Certificate certify_small_volume_s2xR() {
    const SmallVolumeS2xRReport rep = small_volume_s2xR_report();
    Certificate c;
    c.id = "series.small_volume_s2xR";
    c.statement = "I_{S^2 x R}(t) > I_{S^3(3)}(t) for t < 0.25 via certified Taylor gaps";
    c.method = "series";
    c.range = "x in (0, 0.2]";
    c.worst_margin =
        std::min({rep.gap_area_margin, rep.gap_volume_margin, rep.v02_margin, rep.coeff_margin});
    c.pass = rep.pass;
    std::ostringstream d;
    d << "(A-a)/x^4-3 >= " << format_double(rep.gap_area_margin) << "; (v-V)/x^7-51 >= "
      << format_double(rep.gap_volume_margin) << "; V(0.2)-0.25 = "
      << format_double(rep.v02_margin) << "; coeff reproduction margin "
      << format_double(rep.coeff_margin);
    c.details = d.str();
    return c;
}

SmallVolumeS3xRReport small_volume_s3xR_report(double eps) {
    const BallRegion b1 = ball_region_integral(3, 1.0);
    const double scaled_volume = 4.0 * b1.volume;
    const double scaled_area = std::pow(2.0, 1.5) * b1.boundary_area;

    SmallVolumeS3xRReport rep{};
    rep.anchor_volume_margin = 15.0 - scaled_volume;
    rep.anchor_area_margin = scaled_area - 39.0;
    rep.ratio_at_15_margin = scaled_area / std::pow(15.0, 0.75) - 5.0;
    rep.limit_margin = 6.0 - std::pow(2.0, 1.75) * std::sqrt(kPi);
    rep.constant_margin = 5.0 / 6.0 - comparison_constant(eps);
    rep.pass = rep.anchor_volume_margin > 0 && rep.anchor_area_margin > 0 &&
               rep.ratio_at_15_margin > 0 && rep.limit_margin > 0 && rep.constant_margin > 0;
    return rep;
}

Certificate certify_small_volume_s3xR(double eps) {
    const SmallVolumeS3xRReport rep = small_volume_s3xR_report(eps);
    Certificate c;
    c.id = "ratio.small_volume_s3xR";
    c.statement =
        "c I_{S^4 scaled}(v) < I_{S^3(3) x R}(v) for v <= 15 via anchors and monotone ratios";
    c.method = "ratio";
    c.range = "v in (0, 15]";
    c.worst_margin = std::min({rep.anchor_volume_margin, rep.anchor_area_margin,
                               rep.ratio_at_15_margin, rep.limit_margin, rep.constant_margin});
    c.pass = rep.pass;
    std::ostringstream d;
    d << "15-4V(1) = " << format_double(rep.anchor_volume_margin)
      << "; 2^{3/2}A(1)-39 = " << format_double(rep.anchor_area_margin)
      << "; 6-2^{7/4}sqrt(pi) = " << format_double(rep.limit_margin)
      << "; 5/6-c = " << format_double(rep.constant_margin);
    c.details = d.str();
    return c;
}

DerivativeBoundsReport derivative_bounds_report() {
    // order-26 exact series; on (0, 0.2] the tails decay geometrically
    // (ratio <~ 0.05 between retained terms), so truncation is negligible
    // at the scales checked here
    const SmallVolumeSeries s = small_volume_series(26);
    auto nth_derivative = [](PowerSeries p, int k) {
        for (int i = 0; i < k; ++i) p = p.derivative();
        return p;
    };
    const PowerSeries a9 = nth_derivative(s.cyl_area, 9);
    const PowerSeries v10 = nth_derivative(s.cyl_volume, 10);
    const PowerSeries sa9 = nth_derivative(s.sph_area_x, 9);
    const PowerSeries sv10 = nth_derivative(s.sph_volume_x, 10);

    DerivativeBoundsReport rep{};
    rep.min_cyl_area_d9 = std::numeric_limits<double>::infinity();
    rep.min_sph_volume_d10 = std::numeric_limits<double>::infinity();
    rep.max_cyl_volume_d10 = -std::numeric_limits<double>::infinity();
    rep.max_sph_area_d9 = -std::numeric_limits<double>::infinity();
    const std::size_t n = 2000;
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = 0.2 * static_cast<double>(i) / static_cast<double>(n);
        rep.min_cyl_area_d9 = std::min(rep.min_cyl_area_d9, kPi * a9.eval(x));
        rep.max_cyl_volume_d10 = std::max(rep.max_cyl_volume_d10, kPi * v10.eval(x));
        rep.max_sph_area_d9 = std::max(rep.max_sph_area_d9, std::abs(kPi * sa9.eval(x)));
        rep.min_sph_volume_d10 = std::min(rep.min_sph_volume_d10, kPi * sv10.eval(x));
    }
    rep.consistent = rep.min_cyl_area_d9 > 0 && rep.max_cyl_volume_d10 < 3e8 &&
                     rep.max_sph_area_d9 < 7e7 && rep.min_sph_volume_d10 > 0;
    return rep;
}

}  // namespace isoprof
