#include "isoprof/profile_comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "isoprof/cylinder_profiles.hpp"
#include "isoprof/series_certificates.hpp"
#include "isoprof/sphere_geometry.hpp"

namespace isoprof {

Certificate verify_dominance(const DominanceQuery& q) {
    if (!q.lhs || !q.rhs) throw std::invalid_argument("verify_dominance: missing curves");
    if (!(q.scale_c > 0)) throw std::invalid_argument("verify_dominance: scale must be positive");
    if (!(q.v_hi > q.v_lo && q.v_lo > 0))
        throw std::invalid_argument("verify_dominance: bad volume range");
    if (q.grid.points < 2) throw std::invalid_argument("verify_dominance: grid too small");

    const std::vector<double> grid = q.grid.log_spacing
                                         ? log_grid(q.v_lo, q.v_hi, q.grid.points)
                                         : linear_grid(q.v_lo, q.v_hi, q.grid.points);
    double worst = std::numeric_limits<double>::infinity();
    double worst_v = q.v_lo;
    for (const double v : grid) {
        const double m = q.lhs->evaluate(v) - q.scale_c * q.rhs->evaluate(v) - q.required_margin;
        if (m < worst) {
            worst = m;
            worst_v = v;
        }
    }

    Certificate c;
    c.id = q.id.empty() ? "grid.dominance" : q.id;
    c.statement = q.statement.empty()
                      ? q.lhs->label() + " >= " + format_double(q.scale_c) + " * " + q.rhs->label()
                      : q.statement;
    c.method = "grid";
    std::ostringstream r;
    r << "[" << format_double(q.v_lo) << ", " << format_double(q.v_hi) << "], " << q.grid.points
      << (q.grid.log_spacing ? " log" : " linear") << " points";
    c.range = r.str();
    c.worst_margin = worst;
    c.pass = worst >= -kMarginSlack;
    c.details = "worst at v = " + format_double(worst_v);
    return c;
}

double morgan_g(double x) {
    if (!(x > 0.0 && x <= 4.0 * kPi)) throw std::domain_error("morgan_g: x outside (0, 4 pi]");
    return 4.0 * std::sqrt(std::max(4.0 * kPi / x - 1.0, 0.0)) + 2.0 * std::sqrt(kPi * x);
}

namespace {

double morgan_objective(double v, double x) {
    return v * std::sqrt(std::max(4.0 * kPi - x, 0.0)) / std::sqrt(x) +
           2.0 * std::sqrt(kPi * x * v);
}

// Stationary points satisfy x^2 (4 pi - x) = 4 pi v; the cubic's left
// monotone piece carries the only local minimum, the right endpoint is
// always a candidate (the objective decreases into it).
double morgan_argmin(double v) {
    const double peak_x = 8.0 * kPi / 3.0;
    const double cubic_peak = peak_x * peak_x * (4.0 * kPi - peak_x);
    const double target = 4.0 * kPi * v;
    double best_x = 4.0 * kPi;
    double best_f = morgan_objective(v, best_x);  // = 4 pi sqrt(v)
    if (target < cubic_peak) {
        const auto cubic = [](double x) { return x * x * (4.0 * kPi - x); };
        const double x1 =
            find_root([&](double x) { return cubic(x) - target; }, 1e-12, peak_x, 1e-13);
        const double f1 = morgan_objective(v, x1);
        if (f1 < best_f) {
            best_f = f1;
            best_x = x1;
        }
    }
    return best_x;
}

}  // namespace

double morgan_minimizer(double v) {
    if (!(v > 0.0)) throw std::domain_error("morgan_minimizer: v must be positive");
    return morgan_argmin(v);
}

double morgan_product_bound(double v) {
    if (!(v > 0.0)) throw std::domain_error("morgan_product_bound: v must be positive");
    return morgan_objective(v, morgan_argmin(v)) / std::sqrt(2.0);
}

ChordBound build_chord(double v1, double v2) {
    const double v0 = flatten_threshold(3).v_threshold;
    if (!(v1 >= v0))
        throw std::invalid_argument("build_chord: v1 below the flat threshold of I_{S^3(3) x R}");
    if (!(v2 >= 16.0)) throw std::invalid_argument("build_chord: v2 must be >= 16");
    if (!(v2 > v1)) throw std::invalid_argument("build_chord: need v1 < v2");
    ChordBound c;
    c.v1 = v1;
    c.v2 = v2;
    c.left_value = kFlatAreaS3xR;                       // I_{S^3(3) x R}(v1), v1 >= v0
    c.right_value = 4.0 * kPi / std::sqrt(2.0) * std::sqrt(v2);  // Morgan bound at v2
    c.slope = (c.right_value - c.left_value) / (v2 - v1);
    return c;
}

Certificate verify_chord_dominates_sphere(const ChordBound& chord, double eps,
                                          std::size_t grid_points) {
    const ProfileCurve sphere = profile_s4_scaled(eps);
    const double total = *sphere.total_volume;
    const double c_eps = comparison_constant(eps);

    const std::vector<double> grid = linear_grid(chord.v1, total, grid_points);
    double worst = std::numeric_limits<double>::infinity();
    double worst_v = chord.v1;
    for (const double v : grid) {
        const double m = chord.evaluate(v) - c_eps * sphere.evaluate(v);
        if (m < worst) {
            worst = m;
            worst_v = v;
        }
    }

    // analytic tail: l is increasing, the dominated side never exceeds
    // c * (maximal sphere area); past the crossing the bound is automatic
    const double max_area = ball_s4_scaled(0.5 * kPi, eps).boundary_area;
    const double crossing = chord.v1 + (c_eps * max_area - chord.left_value) / chord.slope;
    const bool tail_ok = chord.slope > 0 && crossing <= total;

    Certificate c;
    c.id = "chord.dominates_sphere";
    c.statement = "l(v) >= c * I_{S^4 scaled}(v) for v >= " + format_double(chord.v1);
    c.method = "chord";
    c.range = "[" + format_double(chord.v1) + ", " + format_double(total) + "], " +
              std::to_string(grid_points) + " linear points + analytic tail";
    c.worst_margin = worst;
    c.pass = worst >= -kMarginSlack && tail_ok;
    std::ostringstream d;
    d << "worst at v = " << format_double(worst_v) << "; l reaches c*max sphere area "
      << format_double(c_eps * max_area) << " at v = " << format_double(crossing)
      << (tail_ok ? " (inside the checked range)" : " (TAIL NOT CLOSED)");
    c.details = d.str();
    return c;
}

CertificateSet verify_theorem_1_1(double eps, std::size_t grid_points) {
    CertificateSet set;

    // (a) small volumes + grid window: I_{S^2 x R} >= I_{S^3(3)}
    set.add(certify_small_volume_s2xR());

    const ProfileCurve cyl2 = profile_s2xR();
    const ProfileCurve sph3 = profile_s3_3();
    const double v_th = flatten_threshold(2).v_threshold;
    {
        DominanceQuery q;
        q.lhs = &cyl2;
        q.rhs = &sph3;
        q.v_lo = 0.25;
        q.v_hi = 3.0 * v_th;
        q.grid = GridSpec{grid_points, true};
        q.id = "grid.s2xR_vs_s3";
        q.statement = "I_{S^2 x R}(t) >= I_{S^3(3)}(t)";
        set.add(verify_dominance(q));
    }
    {
        // beyond the grid the flat value 8 pi matches the sphere's maximal
        // area, so dominance holds for every larger volume
        const double sphere_max = sph3.evaluate(0.5 * std::pow(2.0, 2.5) * kPi * kPi);
        Certificate c;
        c.id = "closure.s2xR_vs_s3_tail";
        c.statement = "flat value 8 pi equals max I_{S^3(3)}, closing all t > grid";
        c.method = "closed_form";
        c.range = "t >= " + format_double(3.0 * v_th);
        c.worst_margin = kFlatAreaS2xR - sphere_max;
        c.pass = std::abs(c.worst_margin) <= 1e-9;
        set.add(c);
    }

    set.add(Certificate::assumed(
        "assumed.ros_product",
        "Ros product theorem: slice symmetrization into S^3(3) x R does not increase boundary "
        "area, giving I_{S^2 x R^2} >= I_{S^3(3) x R}"));

    // (c) small volumes + grid window: I_{S^3(3) x R} >= c I_{S^4 scaled}
    set.add(Certificate::assumed(
        "assumed.bayle_ratio",
        "Bayle: I(v)/v^{3/4} is nonincreasing for these 4-dimensional products and spheres"));
    set.add(certify_small_volume_s3xR(eps));

    const ProfileCurve cyl3 = profile_s3_3xR();
    const ProfileCurve sph4 = profile_s4_scaled(eps);
    {
        DominanceQuery q;
        q.lhs = &cyl3;
        q.rhs = &sph4;
        q.scale_c = comparison_constant(eps);
        q.v_lo = 5.0;
        q.v_hi = 100.0;
        q.grid = GridSpec{grid_points, true};
        q.id = "grid.s3xR_vs_s4";
        q.statement = "I_{S^3(3) x R}(t) >= c * I_{S^4 scaled}(t)";
        set.add(verify_dominance(q));
    }

    // (d) large volumes: concavity + Morgan sqrt bound + chord
    set.add(Certificate::assumed(
        "assumed.bayle_concavity",
        "Bayle: I_{S^2 x R^2} is concave (nonnegative Ricci), hence above its chords"));
    {
        // g(x) >= 4 pi on (0, 4 pi), equality only at the right endpoint
        const std::vector<double> xs = linear_grid(1e-6, 4.0 * kPi, 100000);
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            worst = std::min(worst, morgan_g(xs[i]) - 4.0 * kPi);
        Certificate c;
        c.id = "morgan.g_lower_bound";
        c.statement = "4 sqrt(4 pi/x - 1) + 2 sqrt(pi x) >= 4 pi on (0, 4 pi)";
        c.method = "grid";
        c.range = "(0, 4 pi), 1e5 points";
        c.worst_margin = worst;
        c.pass = worst > 0 && std::abs(morgan_g(4.0 * kPi) - 4.0 * kPi) <= 1e-12;
        c.details = "equality only at x = 4 pi";
        set.add(c);
    }
    {
        double worst = std::numeric_limits<double>::infinity();
        for (const double v : log_grid(16.0, 1e4, 1000))
            worst = std::min(worst,
                             morgan_product_bound(v) - 4.0 * kPi / std::sqrt(2.0) * std::sqrt(v));
        Certificate c;
        c.id = "morgan.sqrt_bound";
        c.statement = "(1/sqrt 2) I_P(v) >= (4 pi / sqrt 2) sqrt(v) for v >= 16";
        c.method = "grid";
        c.range = "[16, 1e4], 1000 log points";
        c.worst_margin = worst;
        c.pass = worst >= -kMarginSlack;
        c.details = "the bound is attained (minimizer at x = 4 pi)";
        set.add(c);
    }

    const double v0 = flatten_threshold(3).v_threshold;
    {
        Certificate c;
        c.id = "chord.v0_consistency";
        c.statement = "computed flat threshold v0 of I_{S^3(3) x R} lies below 83.5";
        c.method = "quadrature";
        c.worst_margin = 83.5 - v0;
        c.pass = c.worst_margin > 0;
        c.details = "v0 = " + format_double(v0);
        set.add(c);
    }
    const ChordBound chord = build_chord(83.5, 450.0);
    set.add(Certificate::info(
        "chord.line", "l(v) through (83.5, 8 sqrt(2) pi^2) and (450, 60 pi)",
        "slope = " + format_double(chord.slope)));
    set.add(verify_chord_dominates_sphere(chord, eps, grid_points));

    {
        // coverage: [0, 15] from the ratio step, [5, 100] from the grid,
        // [83.5, infinity) from the chord; the unions overlap
        const double overlap1 = 15.0 - 5.0;
        const double overlap2 = 100.0 - 83.5;
        Certificate c;
        c.id = "coverage.union";
        c.statement = "volume ranges of the sub-steps overlap and cover all v > 0";
        c.method = "interval";
        c.worst_margin = std::min(overlap1, overlap2);
        c.pass = c.worst_margin > 0;
        set.add(c);
    }

    {
        Certificate master;
        master.id = "theorem.profile_comparison";
        master.statement =
            "I_{S^2 x R^2} >= (2 sqrt(eps)/12^{3/8}) I_{S^4 scaled} with eps = " +
            format_double(eps);
        master.method = "composite";
        double m = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (const Certificate& c : set.all()) {
            if (c.kind != CertKind::verified) continue;
            ok = ok && c.pass;
            if (std::isfinite(c.worst_margin)) m = std::min(m, c.worst_margin);
        }
        master.worst_margin = m;
        master.pass = ok;
        set.add(master);
    }
    return set;
}

}  // namespace isoprof
