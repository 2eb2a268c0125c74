#include <doctest.h>

#include <cmath>
#include <random>

#include "fmgl/closed_forms.hpp"
#include "fmgl/gl_derivative.hpp"
#include "fmgl/integral_form.hpp"

using namespace fmgl;

TEST_CASE("constant function reduces to boundary terms") {
    const IntegralFormResult r =
        fm_gl_integral_form(FunctionSpec::constant(3.0), 1.0, FracOrder(0.5), 2.0, 64);
    CHECK(r.value == doctest::Approx(d_constant(3.0, 0.5, 2.0)).epsilon(1e-14));
    CHECK_FALSE(r.used_finite_differences);
}

TEST_CASE("polynomials of degree <= m are boundary-exact") {
    // the integral term vanishes identically and the result is the
    // truncated power rule
    CHECK(fm_gl_integral_form(FunctionSpec::power(1), 3.0, FracOrder(0.5), 2.0, 64).value ==
          doctest::Approx(d_power(1, 3.0, 0.5, 2.0)).epsilon(1e-12));
    CHECK(fm_gl_integral_form(FunctionSpec::power(2), 1.0, FracOrder(1.5), 3.0, 64).value ==
          doctest::Approx(d_power(2, 1.0, 1.5, 3.0)).epsilon(1e-12));
}

TEST_CASE("tau^2 at alpha = 0.5 matches the power rule") {
    const IntegralFormResult r =
        fm_gl_integral_form(FunctionSpec::power(2), 3.0, FracOrder(0.5), 2.0, 256);
    CHECK(std::fabs(r.value - d_power(2, 3.0, 0.5, 2.0)) <= 1e-8);
}

TEST_CASE("sine at (t=10, L=30) matches the closed form") {
    const IntegralFormResult r =
        fm_gl_integral_form(FunctionSpec::sine(), 10.0, FracOrder(0.5), 30.0, 1024);
    CHECK(std::fabs(r.value - d_sin(10.0, 0.5, 30.0)) <= 1e-6);
}

TEST_CASE("doubling panels contracts the error until the floor") {
    const double oracle = d_sin(10.0, 0.5, 30.0);
    double prev = -1.0;
    for (int panels : {2, 4, 8, 16, 32, 64}) {
        const double err = std::fabs(
            fm_gl_integral_form(FunctionSpec::sine(), 10.0, FracOrder(0.5), 30.0, panels).value -
            oracle);
        if (prev >= 0.0 && prev > 1e-9) {
            CHECK(err <= prev / 3.0);
        }
        prev = err;
    }
    CHECK(prev <= 1e-9);
}

TEST_CASE("three-way agreement with the discrete operator, random draws") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double alpha = 0.05 + 0.9 * unit(rng);
        const double L = 1.0 + 9.0 * unit(rng);
        const double t = 10.0 * unit(rng);
        FunctionSpec f = FunctionSpec::sine();
        switch (static_cast<int>(unit(rng) * 4.0)) {
        case 0: f = FunctionSpec::sine(); break;
        case 1: f = FunctionSpec::cosine(); break;
        case 2: f = FunctionSpec::exponential(); break;
        default: f = FunctionSpec::power(3); break;
        }
        const double integral = fm_gl_integral_form(f, t, FracOrder(alpha), L, 1024).value;
        const double discrete = fm_gl_derivative(f, t, FracOrder(alpha), GridSpec(L, 8192));
        CHECK(std::fabs(integral - discrete) <=
              std::max(2e-3, 2e-3 * std::fabs(integral)));
    }
}

TEST_CASE("expression input falls back to finite differences") {
    const FunctionSpec f = FunctionSpec::expression("sin(t)");
    const IntegralFormResult r = fm_gl_integral_form(f, 4.0, FracOrder(0.5), 3.0, 256);
    CHECK(r.used_finite_differences);
    CHECK(r.derivative_error_estimate > 0.0);
    CHECK(r.derivative_error_estimate < 1e-6);  // m+1 = 2: comfortably accurate
    const double exact = fm_gl_integral_form(FunctionSpec::sine(), 4.0, FracOrder(0.5), 3.0, 256).value;
    CHECK(std::fabs(r.value - exact) <= 1e-6);
}

TEST_CASE("integral form validates its inputs") {
    CHECK_THROWS_AS(fm_gl_integral_form(FunctionSpec::sine(), 1.0, FracOrder(1.0), 2.0, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(fm_gl_integral_form(FunctionSpec::sine(), 1.0, FracOrder(0.5), -2.0, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(fm_gl_integral_form(FunctionSpec::sine(), 1.0, FracOrder(0.5), 2.0, 0),
                    std::invalid_argument);
}
