#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "isoprof/profile_curve.hpp"
#include "isoprof/yamabe_symmetrization.hpp"

namespace isoprof {

/// Dense profile dump: header "volume,area,parameter,branch", one row per
/// sample, full double precision.
void write_profile_csv(std::ostream& os, const ProfileCurve& curve,
                       const std::vector<double>& volumes);

struct PlotSeries {
    std::string name;
    std::vector<double> x, y;
    bool dashed = false;
};

/// Comparison dump matching the overlay figures: volume, lhs, scaled rhs,
/// margin.
void write_comparison_csv(std::ostream& os, const std::vector<double>& volumes,
                          const std::vector<double>& lhs, const std::vector<double>& rhs);

/// Self-contained 800x600 SVG line plot, linear axes, no external assets.
void write_svg(std::ostream& os, const std::string& title,
               const std::vector<PlotSeries>& series);

/// Test-function files: blocks of "rho value" lines separated by blank
/// lines; '#' starts a comment.
std::vector<RadialTestFunction> load_test_functions(std::istream& is);
void save_test_function(std::ostream& os, const RadialTestFunction& f);

}  // namespace isoprof
