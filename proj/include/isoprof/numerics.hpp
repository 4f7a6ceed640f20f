#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace isoprof {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Thrown when an iterative scheme fails to reach its tolerance.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b].
/// Throws NumericError when the internal error estimate stays far above
/// the requested relative tolerance.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-12) {
    if (a == b) return 0.0;
    double err = 0.0, l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, /*max_depth=*/15, rel_tol, &err, &l1);
    if (!std::isfinite(value))
        throw NumericError("integrate: non-finite result on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    // err is an absolute estimate; allow plenty of slack over rel_tol before
    // declaring failure, the callers only need ~1e-10.
    if (err > 1e-7 * std::max(l1, 1e-300) && err > 1e-13)
        throw NumericError("integrate: error estimate " + std::to_string(err) +
                           " too large on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    return value;
}

/// Fixed-order Gauss-Legendre panel (no adaptivity, no error estimate).
template <std::size_t N, class F>
double gauss_panel(F&& f, double a, double b) {
    return boost::math::quadrature::gauss<double, N>::integrate(std::forward<F>(f), a, b);
}

/// Root of f on a bracketing interval [lo, hi] (f(lo), f(hi) of opposite
/// sign or zero).  Bisection interleaved with secant steps; the bracket is
/// kept valid throughout.  Tolerance is relative to the interval scale.
template <class F>
double find_root(F&& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 300) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NumericError("find_root: endpoints do not bracket a root");
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-30});
    double a = lo, b = hi, fa = flo, fb = fhi;
    for (int it = 0; it < max_iter; ++it) {
        if (b - a <= rel_tol * scale) break;
        // secant proposal, fall back to bisection when it leaves the bracket
        double x = b - fb * (b - a) / (fb - fa);
        const double mid = 0.5 * (a + b);
        if (!(x > a && x < b)) x = mid;
        // alternate with bisection so the bracket provably shrinks
        if (it % 2 == 1) x = mid;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (fa > 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return 0.5 * (a + b);
}

/// Newton iteration with a bisection safeguard: starts from x0, keeps the
/// iterate inside the bracket [lo, hi].  Used where the derivative is cheap.
template <class F, class DF>
double find_root_newton(F&& f, DF&& df, double lo, double hi, double x0,
                        double rel_tol = 1e-12, int max_iter = 120) {
    double a = lo, b = hi;
    double fa = f(a);
    if (fa == 0.0) return a;
    double fb = f(b);
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw NumericError("find_root_newton: endpoints do not bracket a root");
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-30});
    double x = std::min(std::max(x0, a), b);
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (fa > 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        const double d = df(x);
        double next = (d != 0.0) ? x - fx / d : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(next - x) <= rel_tol * scale) return next;
        x = next;
    }
    return x;
}

inline std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    if (n < 2) throw std::invalid_argument("linear_grid: need at least 2 points");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.front() = lo;
    g.back() = hi;
    return g;
}

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("log_grid: need 0 < lo < hi");
    if (n < 2) throw std::invalid_argument("log_grid: need at least 2 points");
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

inline double relative_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace isoprof
