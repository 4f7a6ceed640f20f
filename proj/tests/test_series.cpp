#include <doctest.h>

#include <cmath>

#include "isoprof/series.hpp"

using namespace isoprof;

namespace {
using QR = QuadraticRational;
}

TEST_SUITE("series") {

TEST_CASE("quadratic rational arithmetic") {
    const QR a(Rational(1, 2), Rational(3));       // 1/2 + 3 sqrt2
    const QR b(Rational(2), Rational(-1, 3));      // 2 - (1/3) sqrt2
    const QR p = a * b;                            // ab: 1 + 2*3*(-1/3) = -1; cross terms
    CHECK(p.a == Rational(-1));
    CHECK(p.b == Rational(-1, 6) + Rational(6));
    CHECK(p.to_double() ==
          doctest::Approx((0.5 + 3 * std::sqrt(2.0)) * (2.0 - std::sqrt(2.0) / 3.0))
              .epsilon(1e-15));
}

TEST_CASE("elementary series match known coefficients") {
    const PowerSeries s = PowerSeries::sin(9);
    CHECK(s.coeff(1).a == Rational(1));
    CHECK(s.coeff(3).a == Rational(-1, 6));
    CHECK(s.coeff(5).a == Rational(1, 120));
    CHECK(s.coeff(7).a == Rational(-1, 5040));

    const PowerSeries c = PowerSeries::cos(8);
    CHECK(c.coeff(0).a == Rational(1));
    CHECK(c.coeff(2).a == Rational(-1, 2));
    CHECK(c.coeff(8).a == Rational(1, 40320));

    const PowerSeries as = PowerSeries::asinh(9);
    CHECK(as.coeff(1).a == Rational(1));
    CHECK(as.coeff(3).a == Rational(-1, 6));
    CHECK(as.coeff(5).a == Rational(3, 40));
    CHECK(as.coeff(7).a == Rational(-5, 112));
    CHECK(as.coeff(9).a == Rational(35, 1152));
}

TEST_CASE("binomial power reproduces geometric and -3/2 series") {
    const PowerSeries x = PowerSeries::variable(10);
    const PowerSeries inv = PowerSeries::binomial_power(Rational(-1), x * x);
    CHECK(inv.coeff(0).a == Rational(1));
    CHECK(inv.coeff(2).a == Rational(-1));
    CHECK(inv.coeff(10).a == Rational(-1));

    const PowerSeries q = PowerSeries::binomial_power(Rational(-3, 2), x * x);
    CHECK(q.coeff(2).a == Rational(-3, 2));
    CHECK(q.coeff(4).a == Rational(15, 8));
    CHECK(q.coeff(6).a == Rational(-35, 16));
    CHECK(q.coeff(8).a == Rational(315, 128));
}

TEST_CASE("composition: sin(2x) from sin and 2x") {
    const PowerSeries inner = PowerSeries::variable(9).scaled(QR::rational(2));
    const PowerSeries s = PowerSeries::sin(9).compose(inner);
    CHECK(s.coeff(1).a == Rational(2));
    CHECK(s.coeff(3).a == Rational(-4, 3));
    CHECK(s.coeff(5).a == Rational(4, 15));
    CHECK(s.coeff(7).a == Rational(-8, 315));
    CHECK(s.coeff(9).a == Rational(4, 2835));
}

TEST_CASE("derivative shifts coefficients") {
    PowerSeries p(4);
    p.set_coeff(3, QR::rational(Rational(5)));
    const PowerSeries d = p.derivative();
    CHECK(d.coeff(2).a == Rational(15));
}

TEST_CASE("evaluation agrees with libm") {
    const PowerSeries s = PowerSeries::sin(25);
    CHECK(s.eval(0.3) == doctest::Approx(std::sin(0.3)).epsilon(1e-15));
    const PowerSeries as = PowerSeries::asinh(25);
    CHECK(as.eval(0.2) == doctest::Approx(std::asinh(0.2)).epsilon(1e-14));
}

TEST_CASE("bounded polynomial sides") {
    BoundedPolynomial p;
    p.terms = {{2, QR::rational(Rational(1))}};
    p.times_pi = false;
    p.direction = BoundDirection::two_sided;
    p.remainder_power = 4;
    p.remainder_constant = 0.5;
    CHECK(p.lower(2.0) == doctest::Approx(4.0 - 8.0));
    CHECK(p.upper(2.0) == doctest::Approx(4.0 + 8.0));
    p.direction = BoundDirection::lower;
    CHECK(p.lower(2.0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(p.upper(2.0), std::logic_error);
}

}  // TEST_SUITE
