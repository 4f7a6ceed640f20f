#include "isoprof/series.hpp"

#include <cmath>

#include "isoprof/numerics.hpp"

namespace isoprof {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

double QuadraticRational::to_double() const {
    return a.convert_to<double>() + b.convert_to<double>() * kSqrt2;
}

PowerSeries PowerSeries::sin(int order) {
    PowerSeries s(order);
    Rational term(1);  // 1/(2k+1)! with alternating sign
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        if (k > 0) term /= Rational(-(2 * k) * (2 * k + 1));
        s.c_[static_cast<std::size_t>(2 * k + 1)] = QuadraticRational::rational(term);
    }
    return s;
}

PowerSeries PowerSeries::cos(int order) {
    PowerSeries s(order);
    Rational term(1);
    for (int k = 0; 2 * k <= order; ++k) {
        if (k > 0) term /= Rational(-(2 * k - 1) * (2 * k));
        s.c_[static_cast<std::size_t>(2 * k)] = QuadraticRational::rational(term);
    }
    return s;
}

PowerSeries PowerSeries::asinh(int order) {
    // asinh(x) = sum_k (-1)^k (2k)! / (4^k (k!)^2 (2k+1)) x^(2k+1)
    PowerSeries s(order);
    Rational central(1);  // (2k)! / (4^k (k!)^2), built incrementally
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        if (k > 0) central *= Rational(-(2 * k - 1), 2 * k);
        s.c_[static_cast<std::size_t>(2 * k + 1)] =
            QuadraticRational::rational(central / Rational(2 * k + 1));
    }
    return s;
}

PowerSeries PowerSeries::binomial_power(const Rational& alpha, const PowerSeries& u) {
    if (!u.coeff(0).is_zero())
        throw std::invalid_argument("binomial_power: inner series must vanish at 0");
    const int n = u.order();
    PowerSeries result = PowerSeries::constant(n, QuadraticRational::rational(1));
    PowerSeries upow = PowerSeries::constant(n, QuadraticRational::rational(1));
    Rational binom(1);  // C(alpha, k)
    for (int k = 1; k <= n; ++k) {
        binom *= (alpha - Rational(k - 1)) / Rational(k);
        if (binom == 0) break;
        upow = upow * u;
        result = result + upow.scaled(QuadraticRational::rational(binom));
    }
    return result;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    const int n = std::min(order(), o.order());
    PowerSeries s(n);
    for (int k = 0; k <= n; ++k) s.c_[static_cast<std::size_t>(k)] = coeff(k) + o.coeff(k);
    return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    const int n = std::min(order(), o.order());
    PowerSeries s(n);
    for (int k = 0; k <= n; ++k) s.c_[static_cast<std::size_t>(k)] = coeff(k) - o.coeff(k);
    return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    const int n = std::min(order(), o.order());
    PowerSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.coeff(j).is_zero()) continue;
            s.c_[static_cast<std::size_t>(i + j)] =
                s.c_[static_cast<std::size_t>(i + j)] + coeff(i) * o.coeff(j);
        }
    }
    return s;
}

PowerSeries PowerSeries::scaled(const QuadraticRational& v) const {
    PowerSeries s(order());
    for (int k = 0; k <= order(); ++k) s.c_[static_cast<std::size_t>(k)] = coeff(k) * v;
    return s;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (!inner.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner series must vanish at 0");
    const int n = std::min(order(), inner.order());
    // Horner: result = c_n; result = result*inner + c_k
    PowerSeries result = PowerSeries::constant(n, coeff(order()));
    for (int k = order() - 1; k >= 0; --k) {
        result = result * inner;
        result.c_[0] = result.c_[0] + coeff(k);
    }
    return result;
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries s(order());
    for (int k = 1; k <= order(); ++k)
        s.c_[static_cast<std::size_t>(k - 1)] = coeff(k) * Rational(k);
    s.c_[static_cast<std::size_t>(order())] = QuadraticRational{};
    return s;
}

double PowerSeries::eval(double x) const {
    double acc = 0.0;
    for (int k = order(); k >= 0; --k) acc = acc * x + coeff(k).to_double();
    return acc;
}

double BoundedPolynomial::eval_poly(double x) const {
    double acc = 0.0;
    for (const auto& [p, c] : terms) acc += c.to_double() * std::pow(x, p);
    return times_pi ? acc * kPi : acc;
}

double BoundedPolynomial::lower(double x) const {
    switch (direction) {
        case BoundDirection::lower: return eval_poly(x);
        case BoundDirection::two_sided:
            return eval_poly(x) - remainder_constant * std::pow(x, remainder_power);
        case BoundDirection::upper:
            throw std::logic_error("BoundedPolynomial: no certified lower bound");
    }
    return 0.0;
}

double BoundedPolynomial::upper(double x) const {
    switch (direction) {
        case BoundDirection::upper: return eval_poly(x);
        case BoundDirection::two_sided:
            return eval_poly(x) + remainder_constant * std::pow(x, remainder_power);
        case BoundDirection::lower:
            throw std::logic_error("BoundedPolynomial: no certified upper bound");
    }
    return 0.0;
}

}  // namespace isoprof
