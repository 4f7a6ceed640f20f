#include "isoprof/profile_curve.hpp"

#include <algorithm>
#include <cmath>

namespace isoprof {

namespace {

// Derivative at xs[i] of the Lagrange polynomial through 4 nodes around i.
double local_fit_derivative(const std::vector<double>& xs, const std::vector<double>& ys,
                            std::size_t i) {
    const std::size_t n = xs.size();
    std::size_t lo = (i >= 1) ? i - 1 : 0;
    if (lo + 3 >= n) lo = n - 4;
    double d = 0.0;
    for (std::size_t j = lo; j < lo + 4; ++j) {
        // l_j'(x_i) for the Lagrange basis on the 4-point stencil
        double term = 0.0;
        for (std::size_t k = lo; k < lo + 4; ++k) {
            if (k == j) continue;
            double prod = 1.0;
            for (std::size_t m = lo; m < lo + 4; ++m) {
                if (m == j || m == k) continue;
                prod *= (xs[i] - xs[m]) / (xs[j] - xs[m]);
            }
            term += prod / (xs[j] - xs[k]);
        }
        d += ys[j] * term;
    }
    return d;
}

}  // namespace

InterpolationTable::InterpolationTable(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 4)
        throw std::invalid_argument("InterpolationTable: need >= 4 matching samples");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw std::invalid_argument("InterpolationTable: grid must be strictly increasing");
    ds_.resize(xs_.size());
    for (std::size_t i = 0; i < xs_.size(); ++i) ds_[i] = local_fit_derivative(xs_, ys_, i);
}

std::size_t InterpolationTable::segment(double x) const {
    if (x <= xs_.front()) return 0;
    if (x >= xs_.back()) return xs_.size() - 2;
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    return static_cast<std::size_t>(it - xs_.begin()) - 1;
}

double InterpolationTable::value(double x) const {
    if (x < xs_.front() - 1e-12 || x > xs_.back() + 1e-12)
        throw std::out_of_range("InterpolationTable: x outside table range");
    const std::size_t k = segment(x);
    const double h = xs_[k + 1] - xs_[k];
    const double t = (x - xs_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return ys_[k] * (2 * t3 - 3 * t2 + 1) + ys_[k + 1] * (-2 * t3 + 3 * t2) +
           h * ds_[k] * (t3 - 2 * t2 + t) + h * ds_[k + 1] * (t3 - t2);
}

double InterpolationTable::derivative(double x) const {
    const std::size_t k = segment(x);
    const double h = xs_[k + 1] - xs_[k];
    const double t = (x - xs_[k]) / h;
    const double t2 = t * t;
    return (ys_[k] * (6 * t2 - 6 * t) + ys_[k + 1] * (-6 * t2 + 6 * t)) / h +
           ds_[k] * (3 * t2 - 4 * t + 1) + ds_[k + 1] * (3 * t2 - 2 * t);
}

double InterpolationTable::inverse(double y) const {
    if (y <= ys_.front()) return xs_.front();
    if (y >= ys_.back()) return xs_.back();
    const auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
    const std::size_t k = static_cast<std::size_t>(it - ys_.begin()) - 1;
    return find_root_newton([&](double x) { return value(x) - y; },
                            [&](double x) { return derivative(x); }, xs_[k], xs_[k + 1],
                            0.5 * (xs_[k] + xs_[k + 1]), 1e-13);
}

}  // namespace isoprof
