#include <doctest.h>

#include <cmath>

#include "isoprof/numerics.hpp"

using namespace isoprof;

TEST_SUITE("numerics") {

TEST_CASE("adaptive quadrature on smooth integrands") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
}

TEST_CASE("endpoint singularity after the clustering substitution") {
    // int_0^1 dx / sqrt(1 - x) = 2, via x = sin(pi t / 2)
    const double v = integrate(
        [](double t) {
            const double x = std::sin(0.5 * kPi * t);
            const double jac = 0.5 * kPi * std::cos(0.5 * kPi * t);
            return jac / std::sqrt(1.0 - x);
        },
        0.0, 1.0);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gauss panels are exact on polynomials") {
    const double v = gauss_panel<8>([](double x) { return x * x * x * x * x; }, 0.0, 2.0);
    CHECK(v == doctest::Approx(64.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("bracketed root finding") {
    const double r = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NumericError);
}

TEST_CASE("newton with bracket safeguard") {
    const double r = find_root_newton([](double x) { return std::cos(x) - x; },
                                      [](double x) { return -std::sin(x) - 1.0; }, 0.0, 1.5, 0.2);
    CHECK(std::cos(r) - r == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("grids hit their endpoints") {
    const auto lin = linear_grid(1.0, 3.0, 11);
    CHECK(lin.front() == 1.0);
    CHECK(lin.back() == 3.0);
    CHECK(lin[5] == doctest::Approx(2.0));
    const auto lg = log_grid(1e-2, 1e2, 5);
    CHECK(lg.front() == 1e-2);
    CHECK(lg.back() == 1e2);
    CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
