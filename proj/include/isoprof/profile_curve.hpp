#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoprof/numerics.hpp"

namespace isoprof {

struct ProfileSample {
    double volume;
    double area;
    double parameter;  // generating parameter (eta, x or r)
    bool flat;         // true past the cylindrical-section threshold
};

/// An isoperimetric profile as a computable curve volume -> boundary area.
/// Curves of compact manifolds evaluate to 0 at and beyond the total volume
/// (the full manifold has empty boundary), so they stay usable as the
/// dominated side of a comparison over any volume range.
class ProfileCurve {
public:
    ProfileCurve(std::string label, std::string parameter_name,
                 std::function<ProfileSample(double)> eval, double volume_min,
                 double volume_max)
        : label_(std::move(label)),
          parameter_name_(std::move(parameter_name)),
          eval_(std::move(eval)),
          volume_min_(volume_min),
          volume_max_(volume_max) {}

    ProfileSample sample(double v) const {
        if (!(v > 0.0)) throw std::domain_error("ProfileCurve: volume must be positive");
        return eval_(v);
    }
    double evaluate(double v) const { return sample(v).area; }

    const std::string& label() const { return label_; }
    const std::string& parameter_name() const { return parameter_name_; }
    double volume_min() const { return volume_min_; }
    double volume_max() const { return volume_max_; }

    std::optional<std::pair<double, double>> flat_cap;  // (v_threshold, flat area)
    std::optional<double> total_volume;                 // compact manifolds only
    double volume_multiplier = 1.0;  // scaling applied to the parametric family
    double area_multiplier = 1.0;

private:
    std::string label_;
    std::string parameter_name_;
    std::function<ProfileSample(double)> eval_;
    double volume_min_;
    double volume_max_;
};

/// Cubic-Hermite interpolation table for a smooth function sampled on a
/// strictly increasing grid.  Node derivatives come from local 4-point
/// polynomial fits, giving O(h^4) accuracy on smooth data.
class InterpolationTable {
public:
    InterpolationTable() = default;
    InterpolationTable(std::vector<double> xs, std::vector<double> ys);

    double value(double x) const;
    double derivative(double x) const;
    /// Inverse for strictly increasing tables: x with value(x) = y.
    double inverse(double y) const;

    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

private:
    std::size_t segment(double x) const;
    std::vector<double> xs_, ys_, ds_;
};

}  // namespace isoprof
