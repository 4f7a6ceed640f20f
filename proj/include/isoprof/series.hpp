#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isoprof {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the field Q(sqrt 2), kept exact: value = a + b*sqrt(2).
struct QuadraticRational {
    Rational a{0};
    Rational b{0};

    QuadraticRational() = default;
    QuadraticRational(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    static QuadraticRational rational(Rational r) { return {std::move(r), Rational(0)}; }
    static QuadraticRational sqrt2_multiple(Rational r) { return {Rational(0), std::move(r)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    double to_double() const;

    QuadraticRational operator+(const QuadraticRational& o) const { return {a + o.a, b + o.b}; }
    QuadraticRational operator-(const QuadraticRational& o) const { return {a - o.a, b - o.b}; }
    QuadraticRational operator-() const { return {-a, -b}; }
    // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,  s^2 = 2
    QuadraticRational operator*(const QuadraticRational& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    QuadraticRational operator*(const Rational& r) const { return {a * r, b * r}; }
    bool operator==(const QuadraticRational& o) const { return a == o.a && b == o.b; }
};

/// Dense truncated power series over Q(sqrt 2).  All arithmetic is exact;
/// only eval() rounds.  Truncation order is the highest retained power.
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    static PowerSeries constant(int order, QuadraticRational v) {
        PowerSeries s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    static PowerSeries variable(int order) {
        PowerSeries s(order);
        if (order >= 1) s.c_[1] = QuadraticRational::rational(1);
        return s;
    }

    // elementary series about 0
    static PowerSeries sin(int order);
    static PowerSeries cos(int order);
    static PowerSeries asinh(int order);
    /// (1 + u)^alpha for a series u with u(0) = 0 and rational alpha.
    static PowerSeries binomial_power(const Rational& alpha, const PowerSeries& u);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const QuadraticRational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, QuadraticRational v) { c_.at(static_cast<std::size_t>(k)) = std::move(v); }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scaled(const QuadraticRational& v) const;
    /// Composition this(inner(x)); requires inner(0) = 0.
    PowerSeries compose(const PowerSeries& inner) const;
    PowerSeries derivative() const;

    double eval(double x) const;  // Horner on rounded coefficients

private:
    std::vector<QuadraticRational> c_;  // c_[k] multiplies x^k
};

enum class BoundDirection { lower, upper, two_sided };

/// A polynomial with exact coefficients plus a one- or two-sided remainder
/// bound |f(x) - pi*poly(x)| style certificate on an interval (0, x_max].
/// `times_pi` says the stored coefficients are the polynomial divided by pi.
struct BoundedPolynomial {
    std::vector<std::pair<int, QuadraticRational>> terms;  // (power, coefficient)
    bool times_pi = true;
    BoundDirection direction = BoundDirection::two_sided;
    int remainder_power = 0;       // remainder bounded by remainder_constant * x^remainder_power
    double remainder_constant = 0; // absolute units (not times pi)
    double x_max = 0.2;

    double eval_poly(double x) const;
    /// Certified lower bound for the target function at x in (0, x_max].
    double lower(double x) const;
    /// Certified upper bound for the target function at x in (0, x_max].
    double upper(double x) const;
};

}  // namespace isoprof
