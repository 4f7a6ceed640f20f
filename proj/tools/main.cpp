#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoprof/cylinder_profiles.hpp"
#include "isoprof/io.hpp"
#include "isoprof/profile_comparison.hpp"
#include "isoprof/verify.hpp"
#include "isoprof/yamabe_symmetrization.hpp"

namespace {

using namespace isoprof;
namespace fs = std::filesystem;

struct CliConfig {
    double eps = kDefaultEps;
    std::size_t grid = 10000;
    double tol = 1e-9;
    std::string out = "out";
    std::string format = "both";
    std::string which;
    std::string input;
    std::size_t count = 20;
    std::uint64_t seed = 12022011;
};

int config_error(const std::string& msg) {
    std::cerr << "configuration error: " << msg << "\n";
    return 2;
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open " + p.string());
    return os;
}

int cmd_verify(const CliConfig& cfg) {
    VerifyOptions opt;
    opt.eps = cfg.eps;
    opt.grid_points = cfg.grid;
    opt.tolerance = cfg.tol;
    opt.suite_size = cfg.count;
    opt.suite_seed = cfg.seed;
    const CertificateSet report = run_full_verification(opt);

    fs::create_directories(cfg.out);
    if (cfg.format == "text" || cfg.format == "both") {
        auto os = open_out(fs::path(cfg.out) / "report.txt");
        report.write_text(os);
    }
    if (cfg.format == "kv" || cfg.format == "both") {
        auto os = open_out(fs::path(cfg.out) / "report.kv");
        report.write_kv(os);
    }
    report.write_text(std::cout);
    return report.all_verified_pass() ? 0 : 1;
}

std::vector<double> curve_grid(double lo, double hi, std::size_t n, bool log_spacing) {
    return log_spacing ? log_grid(lo, hi, n) : linear_grid(lo, hi, n);
}

int cmd_profile(const CliConfig& cfg) {
    fs::create_directories(cfg.out);
    const fs::path base = fs::path(cfg.out) / cfg.which;
    const std::size_t n = cfg.grid;
    const double c = comparison_constant(cfg.eps);

    const auto dump_single = [&](const ProfileCurve& curve, double lo, double hi,
                                 bool log_spacing) {
        const std::vector<double> vols = curve_grid(lo, hi, n, log_spacing);
        {
            auto os = open_out(base.string() + ".csv");
            write_profile_csv(os, curve, vols);
        }
        PlotSeries s{curve.label(), vols, {}, false};
        for (const double v : vols) s.y.push_back(curve.evaluate(v));
        auto os = open_out(base.string() + ".svg");
        write_svg(os, curve.label(), {s});
    };

    const auto dump_overlay = [&](const ProfileCurve& lhs, const ProfileCurve& rhs,
                                  double scale, double lo, double hi, const std::string& title) {
        const std::vector<double> vols = curve_grid(lo, hi, n, false);
        std::vector<double> l, r;
        for (const double v : vols) {
            l.push_back(lhs.evaluate(v));
            r.push_back(scale * rhs.evaluate(v));
        }
        {
            auto os = open_out(base.string() + ".csv");
            write_comparison_csv(os, vols, l, r);
        }
        auto os = open_out(base.string() + ".svg");
        write_svg(os, title,
                  {PlotSeries{lhs.label(), vols, l, false},
                   PlotSeries{(scale == 1.0 ? "" : "c * ") + rhs.label(), vols, r, true}});
    };

    if (cfg.which == "s2xR") {
        const double cap = flatten_threshold(2).v_threshold;
        dump_single(profile_s2xR(), 1e-3, 2.0 * cap, true);
    } else if (cfg.which == "s3_3xR") {
        const double cap = flatten_threshold(3).v_threshold;
        dump_single(profile_s3_3xR(), 1e-3, 2.0 * cap, true);
    } else if (cfg.which == "s3_3") {
        const ProfileCurve curve = profile_s3_3();
        dump_single(curve, 1e-3, *curve.total_volume, false);
    } else if (cfg.which == "s4") {
        const ProfileCurve curve = profile_s4_scaled(cfg.eps);
        dump_single(curve, 1e-3, *curve.total_volume, false);
    } else if (cfg.which == "morgan") {
        std::vector<double> vols = curve_grid(1.0, 1e3, n, true);
        std::vector<double> vals, root;
        for (const double v : vols) {
            vals.push_back(morgan_product_bound(v));
            root.push_back(4.0 * kPi / std::sqrt(2.0) * std::sqrt(v));
        }
        {
            auto os = open_out(base.string() + ".csv");
            write_comparison_csv(os, vols, vals, root);
        }
        auto os = open_out(base.string() + ".svg");
        write_svg(os, "Morgan product bound",
                  {PlotSeries{"(1/sqrt2) I_P", vols, vals, false},
                   PlotSeries{"(4pi/sqrt2) sqrt(v)", vols, root, true}});
    } else if (cfg.which == "figure1a" || cfg.which == "figure1b" || cfg.which == "figure1c") {
        const ProfileCurve lhs = profile_s2xR();
        const ProfileCurve rhs = profile_s3_3();
        double lo, hi;
        if (cfg.which == "figure1a") {
            lo = closed_volume_n2_x(0.5);
            hi = 1.2 * flatten_threshold(2).v_threshold;
        } else if (cfg.which == "figure1b") {
            lo = closed_volume_n2_x(0.3);
            hi = closed_volume_n2_x(0.5);
        } else {
            lo = closed_volume_n2_x(0.2);
            hi = closed_volume_n2_x(0.3);
        }
        dump_overlay(lhs, rhs, 1.0, lo, hi, "I_{S^2 x R} vs I_{S^3(3)}");
    } else if (cfg.which == "figure2") {
        dump_overlay(profile_s3_3xR(), profile_s4_scaled(cfg.eps), c, 5.0, 100.0,
                     "I_{S^3(3) x R} vs c I_{S^4 scaled}");
    } else if (cfg.which == "figure3a") {
        const ChordBound chord = build_chord(83.5, 450.0);
        const std::vector<double> vols = curve_grid(chord.v1, chord.v2, n, false);
        const ProfileCurve cyl = profile_s3_3xR();
        std::vector<double> lv, cv, mv;
        for (const double v : vols) {
            lv.push_back(chord.evaluate(v));
            cv.push_back(cyl.evaluate(v));
            mv.push_back(4.0 * kPi / std::sqrt(2.0) * std::sqrt(v));
        }
        {
            auto os = open_out(base.string() + ".csv");
            write_comparison_csv(os, vols, cv, lv);
        }
        auto os = open_out(base.string() + ".svg");
        write_svg(os, "chord between the lower bounds",
                  {PlotSeries{"I_{S^3(3) x R}", vols, cv, false},
                   PlotSeries{"(4pi/sqrt2) sqrt(v)", vols, mv, false},
                   PlotSeries{"l(v)", vols, lv, true}});
    } else if (cfg.which == "figure3b") {
        const ChordBound chord = build_chord(83.5, 450.0);
        const ProfileCurve sphere = profile_s4_scaled(cfg.eps);
        const double hi = *sphere.total_volume;
        const std::vector<double> vols = curve_grid(chord.v1, hi, n, false);
        std::vector<double> lv, sv;
        for (const double v : vols) {
            lv.push_back(chord.evaluate(v));
            sv.push_back(c * sphere.evaluate(v));
        }
        {
            auto os = open_out(base.string() + ".csv");
            write_comparison_csv(os, vols, lv, sv);
        }
        auto os = open_out(base.string() + ".svg");
        write_svg(os, "chord vs scaled sphere profile",
                  {PlotSeries{"c * I_{S^4 scaled}", vols, sv, false},
                   PlotSeries{"l(v)", vols, lv, true}});
    } else {
        return config_error("unknown curve '" + cfg.which + "'");
    }
    return 0;
}

int cmd_constants(const CliConfig& cfg) {
    const ConstantsReport r = bound_constants(cfg.eps);
    if (cfg.format == "kv") {
        std::cout << "eps=" << format_double(r.eps) << "\n"
                  << "lambda1=" << format_double(kLambda1) << "\n"
                  << "lambda2=" << format_double(lambda2(r.eps)) << "\n"
                  << "c=" << format_double(r.c) << "\n"
                  << "c_squared=" << format_double(r.c_squared) << "\n"
                  << "y_s4=" << format_double(r.y_s4) << "\n"
                  << "lower_bound=" << format_double(r.lower_bound) << "\n"
                  << "identity_residual=" << format_double(r.identity_residual) << "\n"
                  << "two_thirds_margin=" << format_double(r.two_thirds_margin) << "\n";
        return 0;
    }
    std::cout << "eps (S^4 scale tuning)              = " << format_double(r.eps) << "\n";
    std::cout << "lambda1 (S^3 metric scale)          = " << format_double(kLambda1) << "\n";
    std::cout << "lambda2 (S^4 metric scale)          = " << format_double(lambda2(r.eps))
              << "\n";
    std::cout << "c = 2 sqrt(eps)/12^{3/8}            = " << format_double(r.c) << "\n";
    std::cout << "c^2 = sqrt(2) eps/3^{3/4}           = " << format_double(r.c_squared) << "\n";
    std::cout << "Y(S^4) = 8 sqrt(6) pi               = " << format_double(r.y_s4) << "\n";
    std::cout << "lower bound c^2 Y(S^4)              = " << format_double(r.lower_bound) << "\n";
    std::cout << "identity residual                   = " << format_double(r.identity_residual)
              << "\n";
    std::cout << "c^2 - 2/3                           = " << format_double(r.two_thirds_margin)
              << (r.two_thirds_margin > 0 ? "  (beats 2/3)" : "  (below 2/3)") << "\n";
    return 0;
}

int cmd_symmetrize(const CliConfig& cfg) {
    std::vector<RadialTestFunction> functions;
    if (!cfg.input.empty()) {
        std::ifstream is(cfg.input);
        if (!is) return config_error("cannot open input file " + cfg.input);
        functions = load_test_functions(is);
    } else {
        functions = random_test_suite(cfg.count, cfg.seed);
    }
    if (functions.empty()) return config_error("no test functions to run");

    fs::create_directories(cfg.out);
    CertificateSet report;
    for (std::size_t i = 0; i < functions.size(); ++i) {
        ChainDiagnostics d;
        Certificate c = verify_theorem_1_2_chain(functions[i], cfg.eps, &d);
        c.id = "symmetrization.chain." + std::to_string(i);
        report.add(c);
        const std::vector<Layer> layers = layered_decomposition(functions[i], cfg.eps);
        auto os = open_out(fs::path(cfg.out) / ("symmetrized_" + std::to_string(i) + ".txt"));
        for (const Layer& layer : layers) save_test_function(os, layer.symmetrized);
    }
    {
        auto os = open_out(fs::path(cfg.out) / "symmetrize_report.txt");
        report.write_text(os);
    }
    report.write_text(std::cout);
    return report.all_verified_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"isoperimetric profile comparisons and Yamabe lower bounds"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--eps", cfg.eps, "S^4 scale tuning constant (default (1.047)^2)");
        sub->add_option("--grid", cfg.grid, "base grid density (>= 100)");
        sub->add_option("--tol", cfg.tol, "margin slack for pass/fail decisions");
        sub->add_option("--out", cfg.out, "output directory");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the full certificate suite");
    add_common(verify);
    verify->add_option("--format", cfg.format, "report format: text|kv|both");
    verify->add_option("--suite-count", cfg.count, "symmetrization suite size");
    verify->add_option("--seed", cfg.seed, "symmetrization suite seed");

    CLI::App* profile = app.add_subcommand("profile", "dump a profile curve or figure");
    add_common(profile);
    profile
        ->add_option("which", cfg.which,
                     "s2xR|s3_3xR|s3_3|s4|morgan|figure1a|figure1b|figure1c|figure2|figure3a|"
                     "figure3b")
        ->required();

    CLI::App* constants = app.add_subcommand("constants", "print the bound constants");
    constants->add_option("--eps", cfg.eps, "S^4 scale tuning constant");
    constants->add_option("--format", cfg.format, "text|kv");

    CLI::App* symmetrize_cmd =
        app.add_subcommand("symmetrize", "run the symmetrization chain on test functions");
    add_common(symmetrize_cmd);
    symmetrize_cmd->add_option("--input", cfg.input, "test function file (blocks of 'rho value')");
    symmetrize_cmd->add_option("--count", cfg.count, "number of generated functions");
    symmetrize_cmd->add_option("--seed", cfg.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // config errors exit 2, --help exits 0
    }

    if (!(cfg.eps > 0)) return config_error("--eps must be positive");
    if (cfg.grid < 100) return config_error("--grid below the minimum density of 100");
    if (!(cfg.tol > 0)) return config_error("--tol must be positive");
    if (cfg.format != "text" && cfg.format != "kv" && cfg.format != "both")
        return config_error("--format must be text, kv or both");

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (profile->parsed()) return cmd_profile(cfg);
        if (constants->parsed()) return cmd_constants(cfg);
        if (symmetrize_cmd->parsed()) return cmd_symmetrize(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
