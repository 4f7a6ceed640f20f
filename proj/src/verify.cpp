#include "isoprof/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "isoprof/cylinder_profiles.hpp"
#include "isoprof/profile_comparison.hpp"
#include "isoprof/series_certificates.hpp"
#include "isoprof/sphere_geometry.hpp"
#include "isoprof/yamabe_symmetrization.hpp"

namespace isoprof {

namespace {

void add_constants_certs(CertificateSet& set, double eps) {
    const ConstantsReport r = bound_constants(eps);
    {
        std::ostringstream d;
        d << "eps = " << format_double(r.eps) << ", c = " << format_double(r.c)
          << ", c^2 = " << format_double(r.c_squared) << ", Y(S^4) = " << format_double(r.y_s4)
          << ", c^2 Y(S^4) = " << format_double(r.lower_bound);
        set.add(Certificate::info("constants.values",
                                  "comparison constant and Yamabe lower bound", d.str()));
    }
    {
        Certificate c;
        c.id = "constants.identity";
        c.statement = "(2 sqrt(eps)/12^{3/8})^2 = sqrt(2) eps / 3^{3/4}";
        c.method = "closed_form";
        c.worst_margin = 1e-14 - r.identity_residual;
        c.pass = c.worst_margin > 0;
        set.add(c);
    }
    {
        Certificate c;
        c.id = "constants.two_thirds";
        c.statement = "c^2 > 2/3";
        c.method = "closed_form";
        c.worst_margin = r.two_thirds_margin;
        c.pass = c.worst_margin > 0;
        set.add(c);
    }
    set.add(Certificate::assumed(
        "assumed.limit_transfer",
        "large-scaling limit: the bound transfers to Y(S^2 x M^2) for closed surfaces M"));
}

void add_threshold_certs(CertificateSet& set) {
    const FlattenThreshold t2 = flatten_threshold(2);
    {
        Certificate c;
        c.id = "thresholds.n2";
        c.statement = "S^2 x R profile flattens at 8 pi";
        c.method = "closed_form";
        c.worst_margin = std::min(0.01 - std::abs(t2.eta0 - 1.97), 0.01 - std::abs(t2.h0 - 0.66));
        c.pass = c.worst_margin > 0;
        c.details = "eta0 = " + format_double(t2.eta0) + ", h0 = " + format_double(t2.h0) +
                    ", v_threshold = " + format_double(t2.v_threshold);
        set.add(c);
    }
    const FlattenThreshold t3 = flatten_threshold(3);
    {
        Certificate c;
        c.id = "thresholds.n3";
        c.statement = "S^3(3) x R profile flattens at 8 sqrt(2) pi^2";
        c.method = "quadrature";
        c.worst_margin = 0.05 - std::abs(t3.eta0 - 1.9);
        c.pass = c.worst_margin > 0 && std::abs(t3.flat_area - kFlatAreaS3xR) < 1e-9;
        c.details = "x0 = " + format_double(t3.eta0) + ", v0 = " + format_double(t3.v_threshold);
        set.add(c);
    }
}

void add_cross_oracle_cert(CertificateSet& set) {
    // Pedrosa integrals against the closed forms, n = 2
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double eta = flatten_threshold(2).eta0 * i / 51.0;
        const BallRegion qi = ball_region_integral(2, eta);
        const BallRegion cf = ball_region_closed_n2(mean_curvature(2, eta));
        worst = std::max(worst, relative_diff(qi.boundary_area, cf.boundary_area));
        worst = std::max(worst, relative_diff(qi.volume, cf.volume));
    }
    Certificate c;
    c.id = "oracle.quadrature_vs_closed";
    c.statement = "singular quadrature reproduces the closed n = 2 forms";
    c.method = "quadrature";
    c.range = "50 eta values in (0, eta0)";
    c.worst_margin = 1e-9 - worst;
    c.pass = c.worst_margin > 0;
    c.details = "worst relative difference " + format_double(worst);
    set.add(c);
}

void add_sphere_yamabe_cert(CertificateSet& set) {
    // the Yamabe functional of the near-constant function on the scaled
    // S^4 must equal Y(S^4) = 8 sqrt(6) pi independently of eps
    const double want = yamabe_constant_round_sphere(4);
    double worst = 0.0;
    for (const double eps : {1.0, kDefaultEps, 1.2}) {
        const double ramp = 1e-4;
        const RadialTestFunction plateau =
            RadialTestFunction::sphere({0.0, kPi - ramp, kPi}, {1.0, 1.0, 0.0});
        worst = std::max(worst, relative_diff(yamabe_functional(plateau, eps), want));
    }
    Certificate c;
    c.id = "oracle.sphere_yamabe";
    c.statement = "functional of the near-constant function equals 8 sqrt(6) pi for any eps";
    c.method = "closed_form";
    c.range = "eps in {1, (1.047)^2, 1.2}";
    c.worst_margin = 1e-6 - worst;
    c.pass = c.worst_margin > 0;
    c.details = "worst relative difference " + format_double(worst);
    set.add(c);
}

void add_bayle_ratio_cert(CertificateSet& set) {
    // numerical sanity for the assumed monotone-ratio theorem
    const ProfileCurve curve = profile_s3_3xR();
    const std::vector<double> grid = log_grid(1e-3, 1e3, 20000);
    double worst_increase = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (const double v : grid) {
        const double ratio = curve.evaluate(v) / std::pow(v, 0.75);
        if (ratio > prev)
            worst_increase = std::max(worst_increase, (ratio - prev) / prev);
        prev = ratio;
    }
    Certificate c;
    c.id = "sanity.bayle_ratio";
    c.statement = "I_{S^3(3) x R}(v)/v^{3/4} is nonincreasing on the sampled grid";
    c.method = "grid";
    c.range = "[1e-3, 1e3], 2e4 log points";
    c.worst_margin = 1e-10 - worst_increase;
    c.pass = c.worst_margin > 0;
    set.add(c);
}

void add_concavity_cert(CertificateSet& set) {
    // midpoint concavity of the assembled S^2 x R curve on its ball branch
    const ProfileCurve curve = profile_s2xR();
    const double v_th = flatten_threshold(2).v_threshold;
    const std::vector<double> grid = linear_grid(1e-3, v_th, 2000);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 2 < grid.size(); i += 2) {
        const double lhs = curve.evaluate(grid[i + 1]);
        const double rhs = 0.5 * (curve.evaluate(grid[i]) + curve.evaluate(grid[i + 2]));
        worst = std::min(worst, lhs - rhs);
    }
    Certificate c;
    c.id = "sanity.s2xR_concavity";
    c.statement = "midpoint concavity of I_{S^2 x R} on the ball branch";
    c.method = "grid";
    c.range = "(0, v_threshold], 1000 midpoints";
    c.worst_margin = worst;
    c.pass = worst >= -kMarginSlack;
    set.add(c);
}

void add_symmetrization_suite(CertificateSet& set, const VerifyOptions& opt) {
    const std::vector<RadialTestFunction> suite =
        random_test_suite(opt.suite_size, opt.suite_seed);
    double worst_functional = std::numeric_limits<double>::infinity();
    double worst_norm = 0.0, worst_add = 0.0, worst_coarea = 0.0;
    double worst_energy = std::numeric_limits<double>::infinity();
    double worst_levelset = std::numeric_limits<double>::infinity();
    int multi_layer = 0;
    bool all_pass = true;
    for (const RadialTestFunction& f : suite) {
        ChainDiagnostics d;
        verify_theorem_1_2_chain(f, opt.eps, &d);
        all_pass = all_pass && d.pass;
        worst_functional = std::min(worst_functional, d.functional_margin);
        worst_energy = std::min(worst_energy, d.energy_margin);
        worst_levelset = std::min(worst_levelset, d.levelset_min_margin);
        worst_norm = std::max(worst_norm, d.norm_rel_err);
        worst_add = std::max(worst_add, d.additivity_rel_err);
        worst_coarea = std::max(worst_coarea, d.coarea_rel_err);
        if (d.layers > 1) ++multi_layer;
    }
    Certificate c;
    c.id = "symmetrization.suite";
    c.statement = "Y_cyl(f) >= c^2 * sphere-side functional for the seeded test suite";
    c.method = "symmetrization";
    c.range = std::to_string(opt.suite_size) + " functions, seed " +
              std::to_string(opt.suite_seed) + ", " + std::to_string(multi_layer) +
              " multi-layer";
    c.worst_margin = worst_functional;
    c.pass = all_pass && multi_layer > 0;
    std::ostringstream d;
    d << "worst margins: functional " << format_double(worst_functional) << ", energy "
      << format_double(worst_energy) << ", level-set " << format_double(worst_levelset)
      << "; worst errors: norms " << format_double(worst_norm) << ", additivity "
      << format_double(worst_add) << ", coarea " << format_double(worst_coarea);
    c.details = d.str();
    set.add(c);
}

}  // namespace

CertificateSet run_full_verification(const VerifyOptions& opt) {
    CertificateSet set;
    add_constants_certs(set, opt.eps);
    add_threshold_certs(set);
    add_cross_oracle_cert(set);
    set.append(verify_theorem_1_1(opt.eps, opt.grid_points));
    add_bayle_ratio_cert(set);
    add_concavity_cert(set);
    add_sphere_yamabe_cert(set);
    add_symmetrization_suite(set, opt);
    return set;
}

}  // namespace isoprof
