#pragma once

#include <cstdint>
#include <vector>

#include "isoprof/certificate.hpp"
#include "isoprof/constants.hpp"

namespace isoprof {

/// Where a radial test function lives: on S^2 x R^2 (radial in the plane
/// factor, constant on S^2) or on the scaled comparison 4-sphere (radial
/// in the polar angle).
enum class Domain { cylinder_s2xr2, sphere_s4 };

/// Nonincreasing piecewise-linear radial profile.  Cylinder-side functions
/// start at radius 0 and end at value 0 (compact support); sphere-side
/// functions are produced by symmetrization and may end above zero when
/// they represent one layer of a decomposition.
class RadialTestFunction {
public:
    static RadialTestFunction cylinder(std::vector<double> radii, std::vector<double> values);
    static RadialTestFunction sphere(std::vector<double> angles, std::vector<double> values);

    Domain domain() const { return domain_; }
    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& values() const { return values_; }
    double max_value() const { return values_.front(); }
    double end_value() const { return values_.back(); }
    double support_radius() const;  // first radius where the value hits end_value
    double value_at(double rho) const;
    /// sup of the superlevel set {phi > t} (0 when t >= max).
    double superlevel_radius(double t) const;
    /// Volume of the level set {phi = t} (nonzero only at plateau values).
    double plateau_volume(double t, double eps) const;

private:
    RadialTestFunction(Domain d, std::vector<double> r, std::vector<double> v);
    Domain domain_;
    std::vector<double> radii_;
    std::vector<double> values_;
};

/// Yamabe data at n = 4: a_n = 4(n-1)/(n-2) = 6, p_n = 2n/(n-2) = 4,
/// scalar curvatures of the two sides, and the sphere cap volume.
struct YamabeConstants {
    double eps = kDefaultEps;
    static constexpr double a4 = 6.0;
    static constexpr double p4 = 4.0;
    static constexpr double s_cylinder = 2.0;
    double s_sphere() const { return std::pow(12.0, 0.75) / (2.0 * eps); }
    double sphere_scale() const { return lambda2(eps); }
    double cap_volume() const { return eps * eps * 64.0 * kPi * kPi / std::sqrt(3.0); }
};

/// Vol({f > t}); matches 4 pi * (pi rho(t)^2) on the cylinder side and the
/// geodesic-ball volume on the sphere side.
double superlevel_volume(const RadialTestFunction& f, double t, double eps = kDefaultEps);

/// Lq norm ||f||_q^q and Dirichlet energy against the correct volume
/// elements (8 pi^2 rho d rho, resp. 16 sqrt(3) pi^2 eps^2 sin^3 r dr).
double norm_q_pow(const RadialTestFunction& f, int q, double eps = kDefaultEps);
double gradient_energy(const RadialTestFunction& f, double eps = kDefaultEps);

/// Spherical symmetrization: the radial nonincreasing function on the
/// scaled S^4 with identical superlevel volumes.  Requires the support to
/// fit in the sphere; larger supports go through layered_decomposition.
/// The returned representation is refined until the L1, L2 and L4 norms
/// match to 1e-6 relative.
RadialTestFunction symmetrize(const RadialTestFunction& f, double eps = kDefaultEps);

/// One slab t_lo < f <= t_hi of the layer-cake decomposition together with
/// its symmetrization.
struct Layer {
    double t_hi, t_lo;
    std::vector<double> radii;   // cylinder radii spanning the slab annulus
    std::vector<double> values;  // t_hi ... t_lo along them
    RadialTestFunction symmetrized;
    double volume;
};

/// Cuts f at levels t0 = max f >= t1 >= ... >= tN = 0 so every slab except
/// the last has exactly the sphere cap volume, and symmetrizes each slab.
std::vector<Layer> layered_decomposition(const RadialTestFunction& f, double eps = kDefaultEps);

/// Lq norm of one cylinder-side slab (integral over its annulus only).
double layer_norm_q_pow(const Layer& layer, int q);
double layer_gradient_energy(const Layer& layer);

/// (6 E + s Q) / sqrt(P) with E, Q, P integrated exactly over the radial
/// representation; s is the scalar curvature of f's domain.
double yamabe_functional(const RadialTestFunction& f, double eps = kDefaultEps);

struct ChainDiagnostics {
    int layers = 0;
    double norm_rel_err = 0;        // worst over layers and q in {1,2,4}
    double additivity_rel_err = 0;  // worst over q in {2,4}
    double coarea_rel_err = 0;
    double energy_margin = 0;       // E_cyl - c^2 E_sph, absolute
    double levelset_min_margin = 0; // min over levels of A_cyl - c A_sph
    double y_cylinder = 0;          // Y(f) on the cylinder side
    double y_rhs = 0;               // c^2 * sphere-side functional value
    double functional_margin = 0;   // y_cylinder - y_rhs
    double y4_chain_margin = 0;     // y_cylinder - c^2 Y(S^4), multi-layer tail
    bool pass = false;
};

/// Verifies every displayed step of the symmetrization chain for one test
/// function: norm preservation, layer additivity, the gradient-energy
/// comparison with factor c^2, the level-set area comparison, and the
/// final functional inequality.
Certificate verify_theorem_1_2_chain(const RadialTestFunction& f, double eps = kDefaultEps,
                                     ChainDiagnostics* diag = nullptr);

/// The constants of the lower bound: c, c^2, Y(S^4), c^2 Y(S^4), the
/// algebraic identity c^2 = sqrt(2) eps / 3^{3/4} and the 2/3 comparison.
struct ConstantsReport {
    double eps;
    double c;
    double c_squared;
    double y_s4;
    double lower_bound;        // c^2 * Y(S^4)
    double identity_residual;  // |(2 sqrt(eps)/12^{3/8})^2 - sqrt(2) eps/3^{3/4}|
    double two_thirds_margin;  // c^2 - 2/3
};
ConstantsReport bound_constants(double eps = kDefaultEps);

/// Deterministic suite of factor-radial test functions (mixed single- and
/// multi-layer supports).
std::vector<RadialTestFunction> random_test_suite(std::size_t count, std::uint64_t seed);

}  // namespace isoprof
