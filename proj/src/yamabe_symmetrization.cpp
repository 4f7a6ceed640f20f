#include "isoprof/yamabe_symmetrization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isoprof/numerics.hpp"
#include "isoprof/sphere_geometry.hpp"

namespace isoprof {

namespace {

// dvol on S^2 x R^2 restricted to radial functions: 4 pi * 2 pi rho d rho
constexpr double kCylMeasure = 8.0 * kPi * kPi;

// dvol on the scaled S^4: coeff * sin^3 r dr (= dV/dr of the geodesic ball)
double sphere_measure_coeff(double eps) {
    return 16.0 * std::sqrt(3.0) * kPi * kPi * eps * eps;
}

double sin3_primitive(double r) {
    const double c = std::cos(r);
    return -c + c * c * c / 3.0;
}

// smooth integrand, chunked fixed-order panels keep it at machine accuracy
template <class F>
double integrate_chunked(F&& f, double a, double b) {
    if (b <= a) return 0.0;
    const int chunks = std::max(1, static_cast<int>(std::ceil((b - a) / 0.1)));
    double s = 0.0;
    for (int i = 0; i < chunks; ++i) {
        const double x0 = a + (b - a) * i / chunks;
        const double x1 = a + (b - a) * (i + 1) / chunks;
        s += gauss_panel<24>(f, x0, x1);
    }
    return s;
}

void check_q(int q) {
    if (q != 1 && q != 2 && q != 4)
        throw std::invalid_argument("norm_q_pow: q must be 1, 2 or 4");
}

double pow_q(double v, int q) {
    switch (q) {
        case 1: return v;
        case 2: return v * v;
        default: return v * v * v * v;
    }
}

}  // namespace

RadialTestFunction::RadialTestFunction(Domain d, std::vector<double> r, std::vector<double> v)
    : domain_(d), radii_(std::move(r)), values_(std::move(v)) {
    if (radii_.size() != values_.size() || radii_.size() < 2)
        throw std::invalid_argument("RadialTestFunction: need >= 2 matching breakpoints");
    if (radii_.front() != 0.0)
        throw std::invalid_argument("RadialTestFunction: radii must start at 0");
    for (std::size_t i = 1; i < radii_.size(); ++i)
        if (!(radii_[i] > radii_[i - 1]))
            throw std::invalid_argument("RadialTestFunction: radii must strictly increase");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] >= 0.0))
            throw std::invalid_argument("RadialTestFunction: values must be nonnegative");
        if (i > 0 && values_[i] > values_[i - 1] + 1e-15)
            throw std::invalid_argument("RadialTestFunction: values must be nonincreasing");
    }
}

RadialTestFunction RadialTestFunction::cylinder(std::vector<double> radii,
                                                std::vector<double> values) {
    if (values.empty() || values.back() != 0.0)
        throw std::invalid_argument("RadialTestFunction: cylinder profile must end at 0");
    return RadialTestFunction(Domain::cylinder_s2xr2, std::move(radii), std::move(values));
}

RadialTestFunction RadialTestFunction::sphere(std::vector<double> angles,
                                              std::vector<double> values) {
    if (angles.back() > kPi + 1e-12)
        throw std::invalid_argument("RadialTestFunction: sphere angles exceed pi");
    return RadialTestFunction(Domain::sphere_s4, std::move(angles), std::move(values));
}

double RadialTestFunction::support_radius() const { return superlevel_radius(end_value()); }

double RadialTestFunction::value_at(double rho) const {
    if (rho <= 0.0) return values_.front();
    if (rho >= radii_.back()) return values_.back();
    const auto it = std::upper_bound(radii_.begin(), radii_.end(), rho);
    const std::size_t j = static_cast<std::size_t>(it - radii_.begin());
    const double t = (rho - radii_[j - 1]) / (radii_[j] - radii_[j - 1]);
    return values_[j - 1] + t * (values_[j] - values_[j - 1]);
}

double RadialTestFunction::superlevel_radius(double t) const {
    if (t >= values_.front()) return 0.0;
    for (std::size_t j = 1; j < values_.size(); ++j) {
        if (values_[j] <= t) {
            // crossing inside segment j-1 -> j (values_[j-1] > t >= values_[j])
            const double drop = values_[j - 1] - values_[j];
            const double frac = (values_[j - 1] - t) / drop;
            return radii_[j - 1] + frac * (radii_[j] - radii_[j - 1]);
        }
    }
    return radii_.back();
}

double RadialTestFunction::plateau_volume(double t, double eps) const {
    double vol = 0.0;
    for (std::size_t j = 1; j < values_.size(); ++j) {
        if (values_[j] == t && values_[j - 1] == t) {
            if (domain_ == Domain::cylinder_s2xr2) {
                vol += 4.0 * kPi * kPi * (radii_[j] * radii_[j] - radii_[j - 1] * radii_[j - 1]);
            } else {
                vol += ball_s4_scaled(radii_[j], eps).volume -
                       ball_s4_scaled(radii_[j - 1], eps).volume;
            }
        }
    }
    return vol;
}

double superlevel_volume(const RadialTestFunction& f, double t, double eps) {
    if (t < 0.0) throw std::domain_error("superlevel_volume: level must be >= 0");
    const double r = f.superlevel_radius(t);
    if (f.domain() == Domain::cylinder_s2xr2) return 4.0 * kPi * kPi * r * r;
    return ball_s4_scaled(r, eps).volume;
}

namespace {

double norm_q_pow_span(const std::vector<double>& radii, const std::vector<double>& values,
                       Domain domain, int q, double eps) {
    double total = 0.0;
    const double coeff = sphere_measure_coeff(eps);
    for (std::size_t j = 1; j < radii.size(); ++j) {
        const double a = radii[j - 1], b = radii[j];
        const double va = values[j - 1];
        const double slope = (values[j] - va) / (b - a);
        if (va == 0.0 && values[j] == 0.0) continue;
        if (domain == Domain::cylinder_s2xr2) {
            total += kCylMeasure * gauss_panel<8>(
                                       [&](double rho) {
                                           return pow_q(va + slope * (rho - a), q) * rho;
                                       },
                                       a, b);
        } else {
            total += coeff * integrate_chunked(
                                 [&](double r) {
                                     const double s = std::sin(r);
                                     return pow_q(va + slope * (r - a), q) * s * s * s;
                                 },
                                 a, b);
        }
    }
    return total;
}

double energy_span(const std::vector<double>& radii, const std::vector<double>& values,
                   Domain domain, double eps) {
    double total = 0.0;
    const double coeff = sphere_measure_coeff(eps);
    const double lam2 = lambda2(eps);
    for (std::size_t j = 1; j < radii.size(); ++j) {
        const double a = radii[j - 1], b = radii[j];
        const double slope = (values[j] - values[j - 1]) / (b - a);
        if (slope == 0.0) continue;
        if (domain == Domain::cylinder_s2xr2) {
            total += kCylMeasure * slope * slope * 0.5 * (b * b - a * a);
        } else {
            // |grad| in the scaled metric is |psi'(r)| / sqrt(lambda2)
            total += coeff * slope * slope / lam2 * (sin3_primitive(b) - sin3_primitive(a));
        }
    }
    return total;
}

}  // namespace

double norm_q_pow(const RadialTestFunction& f, int q, double eps) {
    check_q(q);
    return norm_q_pow_span(f.radii(), f.values(), f.domain(), q, eps);
}

double gradient_energy(const RadialTestFunction& f, double eps) {
    return energy_span(f.radii(), f.values(), f.domain(), eps);
}

double layer_norm_q_pow(const Layer& layer, int q) {
    check_q(q);
    return norm_q_pow_span(layer.radii, layer.values, Domain::cylinder_s2xr2, q, kDefaultEps);
}

double layer_gradient_energy(const Layer& layer) {
    return energy_span(layer.radii, layer.values, Domain::cylinder_s2xr2, kDefaultEps);
}

namespace {

// Spherical symmetrization of one radial slab [rho_in, rho_out).  The exact
// symmetrization is psi(r) = phi(sqrt(rho_in^2 + V_ball(r)/(4 pi^2))); it is
// represented piecewise-linearly in r and refined until the L1/L2/L4 norms
// match the slab's (they agree exactly in the limit).
RadialTestFunction symmetrize_span(const std::vector<double>& radii,
                                   const std::vector<double>& values, double eps) {
    const double rho_in = radii.front();
    const double base = 4.0 * kPi * kPi * rho_in * rho_in;
    const YamabeConstants yc{eps};
    const double span_volume =
        4.0 * kPi * kPi * radii.back() * radii.back() - base;
    if (span_volume > yc.cap_volume() * (1.0 + 1e-12))
        throw std::invalid_argument(
            "symmetrize: support exceeds the sphere volume; use layered_decomposition");

    const auto angle_of_rho = [&](double rho) {
        const double v = 4.0 * kPi * kPi * rho * rho - base;
        return ball_s4_scaled_at_volume(std::min(v, yc.cap_volume()), eps).radius_angle;
    };

    double target[3];
    const int qs[3] = {1, 2, 4};
    for (int i = 0; i < 3; ++i)
        target[i] = norm_q_pow_span(radii, values, Domain::cylinder_s2xr2, qs[i], eps);

    for (std::size_t k = 4; k <= 1024; k *= 2) {
        std::vector<double> angles, psi;
        angles.reserve(radii.size() * k);
        psi.reserve(radii.size() * k);
        angles.push_back(0.0);
        psi.push_back(values.front());
        for (std::size_t j = 1; j < radii.size(); ++j) {
            const bool plateau = values[j] == values[j - 1];
            const std::size_t steps = plateau ? 1 : k;
            for (std::size_t s = 1; s <= steps; ++s) {
                const double frac = static_cast<double>(s) / static_cast<double>(steps);
                const double rho = radii[j - 1] + frac * (radii[j] - radii[j - 1]);
                const double r = angle_of_rho(rho);
                if (r <= angles.back() + 1e-15) continue;
                angles.push_back(r);
                psi.push_back(values[j - 1] + frac * (values[j] - values[j - 1]));
            }
        }
        if (angles.size() < 2) {  // identically degenerate slab
            return RadialTestFunction::sphere({0.0, kPi}, {values.front(), values.front()});
        }
        RadialTestFunction candidate = RadialTestFunction::sphere(angles, psi);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double got = norm_q_pow(candidate, qs[i], eps);
            worst = std::max(worst, std::abs(got - target[i]) / std::max(target[i], 1e-300));
        }
        if (worst <= 1e-6) return candidate;
    }
    throw NumericError("symmetrize: norm preservation did not converge");
}

}  // namespace

RadialTestFunction symmetrize(const RadialTestFunction& f, double eps) {
    if (f.domain() != Domain::cylinder_s2xr2)
        throw std::invalid_argument("symmetrize: input must live on S^2 x R^2");
    if (f.max_value() == 0.0) return RadialTestFunction::sphere({0.0, kPi}, {0.0, 0.0});
    const double rho_s = f.support_radius();
    // trim to the support
    std::vector<double> radii, values;
    for (std::size_t i = 0; i < f.radii().size() && f.radii()[i] < rho_s; ++i) {
        radii.push_back(f.radii()[i]);
        values.push_back(f.values()[i]);
    }
    radii.push_back(rho_s);
    values.push_back(0.0);
    return symmetrize_span(radii, values, eps);
}

std::vector<Layer> layered_decomposition(const RadialTestFunction& f, double eps) {
    if (f.domain() != Domain::cylinder_s2xr2)
        throw std::invalid_argument("layered_decomposition: input must live on S^2 x R^2");
    const YamabeConstants yc{eps};
    const double cap = yc.cap_volume();
    const double total = superlevel_volume(f, 0.0, eps);

    // cut levels: every slab {t_i < f <= t_{i-1}} holds exactly the cap
    // volume, the last possibly less
    std::vector<double> cuts{f.max_value()};
    double filled = 0.0;  // Vol{f > current cut}
    while (total - filled > cap * (1.0 + 1e-12)) {
        const double t_prev = cuts.back();
        const double want = filled + cap;
        double lo = 0.0, hi = t_prev;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (superlevel_volume(f, mid, eps) > want)
                lo = mid;
            else
                hi = mid;
        }
        const double t_cut = hi;
        const double got = superlevel_volume(f, t_cut, eps);
        if (std::abs(got - want) > 1e-8 * cap) {
            // the target falls inside a plateau jump; cut at the plateau
            // value, giving a smaller slab
            if (f.plateau_volume(t_cut, eps) > cap)
                throw std::domain_error(
                    "layered_decomposition: a single level set exceeds the sphere volume");
            if (!(got > filled + 1e-12 * cap))
                throw NumericError("layered_decomposition: empty slab at a plateau");
        }
        cuts.push_back(t_cut);
        filled = got;
    }
    cuts.push_back(0.0);

    std::vector<Layer> layers;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double t_hi = cuts[i - 1], t_lo = cuts[i];
        const double rho_in = f.superlevel_radius(t_hi);
        const double rho_out = f.superlevel_radius(t_lo);
        if (!(rho_out > rho_in)) continue;  // degenerate top slab
        Layer layer;
        layer.t_hi = t_hi;
        layer.t_lo = t_lo;
        layer.radii.push_back(rho_in);
        layer.values.push_back(t_hi);
        for (std::size_t j = 0; j < f.radii().size(); ++j) {
            if (f.radii()[j] > rho_in && f.radii()[j] < rho_out) {
                layer.radii.push_back(f.radii()[j]);
                layer.values.push_back(f.values()[j]);
            }
        }
        layer.radii.push_back(rho_out);
        layer.values.push_back(t_lo);
        layer.volume =
            4.0 * kPi * kPi * (rho_out * rho_out - rho_in * rho_in);
        layer.symmetrized = symmetrize_span(layer.radii, layer.values, eps);
        layers.push_back(std::move(layer));
    }
    return layers;
}

double yamabe_functional(const RadialTestFunction& f, double eps) {
    const double p4 = norm_q_pow(f, 4, eps);
    if (!(p4 > 0.0)) throw std::domain_error("yamabe_functional: zero function");
    const double energy = gradient_energy(f, eps);
    const double q2 = norm_q_pow(f, 2, eps);
    const YamabeConstants yc{eps};
    const double s = (f.domain() == Domain::cylinder_s2xr2) ? YamabeConstants::s_cylinder
                                                            : yc.s_sphere();
    return (YamabeConstants::a4 * energy + s * q2) / std::sqrt(p4);
}

namespace {

// slope |phi'| of the segment a regular level t crosses; 0 at plateaus
double slope_at_level(const RadialTestFunction& f, double t) {
    const auto& values = f.values();
    const auto& radii = f.radii();
    if (t >= values.front()) return 0.0;
    for (std::size_t j = 1; j < values.size(); ++j) {
        if (values[j] <= t) {
            if (values[j] == values[j - 1]) return 0.0;
            return (values[j] - values[j - 1]) / (radii[j] - radii[j - 1]);
        }
    }
    return 0.0;
}

// coarea-formula evaluation of the gradient energy on a level grid
// (breakpoint levels included, so the piecewise-linear structure is exact;
// plateau levels carry no area and are skipped)
double coarea_energy(const RadialTestFunction& f) {
    std::set<double> levels(f.values().begin(), f.values().end());
    const double top = f.max_value();
    for (int i = 0; i <= 4000; ++i) levels.insert(top * i / 4000.0);
    std::vector<double> ts(levels.begin(), levels.end());

    double total = 0.0;
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double ta = ts[i - 1], tb = ts[i];
        const double slope = slope_at_level(f, 0.5 * (ta + tb));
        if (slope == 0.0) continue;
        const double rho_a = f.superlevel_radius(ta);
        const double rho_b = f.superlevel_radius(tb);
        // level set area is 8 pi^2 rho(t), linear in t across this band
        total += kCylMeasure * std::abs(slope) * 0.5 * (rho_a + rho_b) * (tb - ta);
    }
    return total;
}

}  // namespace

Certificate verify_theorem_1_2_chain(const RadialTestFunction& f, double eps,
                                     ChainDiagnostics* diag_out) {
    if (f.domain() != Domain::cylinder_s2xr2)
        throw std::invalid_argument("verify_theorem_1_2_chain: input must live on S^2 x R^2");
    if (!(norm_q_pow(f, 4, eps) > 0.0))
        throw std::domain_error("verify_theorem_1_2_chain: zero function");

    const YamabeConstants yc{eps};
    const double c2 = yamabe_bound_constant(eps);
    ChainDiagnostics d{};

    const std::vector<Layer> layers = layered_decomposition(f, eps);
    d.layers = static_cast<int>(layers.size());

    // norm preservation per layer, additivity across layers
    double sum_q2 = 0.0, sum_q4 = 0.0;
    double e_cyl = 0.0, e_sph = 0.0;
    double num_sph = 0.0, p_sph = 0.0, sum_sqrt_p = 0.0;
    for (const Layer& layer : layers) {
        for (const int q : {1, 2, 4}) {
            const double cyl = layer_norm_q_pow(layer, q);
            const double sph = norm_q_pow(layer.symmetrized, q, eps);
            d.norm_rel_err =
                std::max(d.norm_rel_err, std::abs(sph - cyl) / std::max(cyl, 1e-300));
        }
        sum_q2 += layer_norm_q_pow(layer, 2);
        sum_q4 += layer_norm_q_pow(layer, 4);
        e_cyl += layer_gradient_energy(layer);
        const double le = gradient_energy(layer.symmetrized, eps);
        const double lq2 = norm_q_pow(layer.symmetrized, 2, eps);
        const double lq4 = norm_q_pow(layer.symmetrized, 4, eps);
        e_sph += le;
        num_sph += YamabeConstants::a4 * le + yc.s_sphere() * lq2;
        p_sph += lq4;
        sum_sqrt_p += std::sqrt(lq4);
    }
    const double q2_f = norm_q_pow(f, 2, eps);
    const double q4_f = norm_q_pow(f, 4, eps);
    d.additivity_rel_err = std::max(std::abs(sum_q2 - q2_f) / q2_f,
                                    std::abs(sum_q4 - q4_f) / q4_f);

    // gradient-energy comparison with factor c^2
    d.energy_margin = e_cyl - c2 * e_sph;

    // coarea cross-check of the cylinder energy
    const double e_direct = gradient_energy(f, eps);
    d.coarea_rel_err = std::abs(coarea_energy(f) - e_direct) / std::max(e_direct, 1e-300);

    // level-set area comparison within each layer (volumes below the cap)
    d.levelset_min_margin = std::numeric_limits<double>::infinity();
    for (const Layer& layer : layers) {
        const double base = 4.0 * kPi * kPi * layer.radii.front() * layer.radii.front();
        for (int i = 1; i < 400; ++i) {
            const double t =
                layer.t_lo + (layer.t_hi - layer.t_lo) * i / 400.0;
            const double rho = f.superlevel_radius(t);
            const double v_layer = 4.0 * kPi * kPi * rho * rho - base;
            if (!(v_layer > 0.0) || v_layer >= yc.cap_volume()) continue;
            const double lhs = kCylMeasure * rho;  // level set S^2 x circle: 8 pi^2 rho
            const double rhs = comparison_constant(eps) *
                               ball_s4_scaled_at_volume(v_layer, eps).boundary_area;
            d.levelset_min_margin = std::min(d.levelset_min_margin, lhs - rhs);
        }
    }

    // final functional inequality
    d.y_cylinder = yamabe_functional(f, eps);
    d.y_rhs = c2 * num_sph / std::sqrt(p_sph);
    d.functional_margin = d.y_cylinder - d.y_rhs;
    d.y4_chain_margin = d.y_cylinder - c2 * yamabe_constant_round_sphere(4);

    d.pass = d.norm_rel_err <= 1e-6 && d.additivity_rel_err <= 1e-6 &&
             d.coarea_rel_err <= 1e-5 && d.energy_margin > 0 && d.functional_margin > 0 &&
             d.y4_chain_margin > 0 && d.levelset_min_margin >= -1e-9;

    if (diag_out) *diag_out = d;

    Certificate c;
    c.id = "symmetrization.chain";
    c.statement = "Y_cyl(f) >= c^2 * sphere-side functional for one test function";
    c.method = "symmetrization";
    c.range = std::to_string(d.layers) + " layer(s)";
    c.worst_margin = std::min(d.functional_margin, d.y4_chain_margin);
    c.pass = d.pass;
    std::ostringstream os;
    os << "Y_cyl = " << format_double(d.y_cylinder) << ", rhs = " << format_double(d.y_rhs)
       << ", norm err " << format_double(d.norm_rel_err) << ", coarea err "
       << format_double(d.coarea_rel_err);
    c.details = os.str();
    return c;
}

ConstantsReport bound_constants(double eps) {
    if (!(eps > 0)) throw std::domain_error("bound_constants: eps must be positive");
    ConstantsReport r{};
    r.eps = eps;
    r.c = comparison_constant(eps);
    r.c_squared = r.c * r.c;
    r.y_s4 = yamabe_constant_round_sphere(4);
    r.lower_bound = r.c_squared * r.y_s4;
    r.identity_residual = std::abs(r.c_squared - yamabe_bound_constant(eps));
    r.two_thirds_margin = r.c_squared - 2.0 / 3.0;
    return r;
}

std::vector<RadialTestFunction> random_test_suite(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<RadialTestFunction> suite;
    suite.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const bool wide = (i % 2) == 1;  // supports needing several layers
        const std::size_t segments = 4 + static_cast<std::size_t>(unit(rng) * 8.0);
        std::vector<double> radii{0.0};
        for (std::size_t j = 0; j < segments; ++j)
            radii.push_back(radii.back() + 0.15 + 0.85 * unit(rng));
        const double target = wide ? 4.0 + 3.0 * unit(rng) : 0.6 + 2.4 * unit(rng);
        const double scale = target / radii.back();
        for (double& r : radii) r *= scale;
        std::vector<double> values;
        double v = 0.5 + 2.5 * unit(rng);
        for (std::size_t j = 0; j < segments; ++j) {
            values.push_back(v);
            v *= 0.45 + 0.45 * unit(rng);
        }
        values.push_back(0.0);
        suite.push_back(RadialTestFunction::cylinder(radii, values));
    }
    return suite;
}

}  // namespace isoprof
