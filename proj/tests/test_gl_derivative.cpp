#include <doctest.h>

#include <cmath>
#include <random>

#include "fmgl/closed_forms.hpp"
#include "fmgl/errors.hpp"
#include "fmgl/fde_solver.hpp"
#include "fmgl/gl_derivative.hpp"

using namespace fmgl;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)
}

TEST_CASE("constant function approaches C / (L^alpha Gamma(1-alpha))") {
    const FunctionSpec one = FunctionSpec::constant(1.0);
    const double value = fm_gl_derivative(one, 0.0, FracOrder(0.5), GridSpec(1.0, 4096));
    CHECK(std::fabs(value - kInvSqrtPi) <= 1e-3);
}

TEST_CASE("integer order reduces to plain differences, bitwise") {
    const auto f = [](double t) { return std::sin(1.3 * t) + t * t; };
    const GridSpec grid(2.0, 64);
    const double h = grid.h;
    for (double t : {0.0, 1.7, 5.0}) {
        const double backward = (f(t) - f(t - h)) / h;
        CHECK(fm_gl_derivative(f, t, FracOrder(1.0), grid) == backward);
        CHECK(fm_gl_derivative(f, t, FracOrder(0.0), grid) == f(t));
    }
    // linear function at alpha = 1: exactly 1 when the sample arithmetic
    // is exact (dyadic h), and to rounding otherwise
    const FunctionSpec lin = FunctionSpec::polynomial({0.0, 1.0});
    CHECK(fm_gl_derivative(lin, 5.0, FracOrder(1.0), GridSpec(2.0, 128)) == 1.0);
    CHECK(fm_gl_derivative(lin, 5.0, FracOrder(1.0), GridSpec(3.0, 100)) ==
          doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("sin derivative matches the closed form at N = 3000") {
    // max error over the output grid is 2.5e-3 (pure O(h) truncation of
    // the window sum at h = 0.01)
    const FracOrder order(0.5);
    const GridSpec grid(30.0, 3000);
    const Series series =
        fm_gl_derivative_series(FunctionSpec::sine(), 0.0, 4.0 * kPi, order, grid);
    double worst = 0.0;
    for (int i = 0; i < series.size(); ++i) {
        worst = std::max(worst, std::fabs(series.values[i] - d_sin(series.time_at(i), 0.5, 30.0)));
    }
    CHECK(worst <= 3e-3);
}

TEST_CASE("series of a constant is constant") {
    const Series series = fm_gl_derivative_series(FunctionSpec::constant(4.0), 0.0, 2.0,
                                                  FracOrder(0.7), GridSpec(3.0, 128));
    for (double v : series.values) {
        CHECK(v == series.values.front());
    }
}

TEST_CASE("series on a period-aligned grid repeats to machine precision") {
    const int N = 512;
    const GridSpec grid(2.0 * kPi, N);  // h = 2pi/N, so T = N h
    const Series series = fm_gl_derivative_series(FunctionSpec::sine(), 0.0, 6.0 * kPi,
                                                  FracOrder(0.5), grid);
    double defect = 0.0;
    for (int i = 0; i + N < series.size(); ++i) {
        defect = std::max(defect, std::fabs(series.values[i + N] - series.values[i]));
    }
    CHECK(defect <= 1e-13);
    CHECK(periodicity_defect(series, 2.0 * kPi) <= 1e-13);
}

TEST_CASE("linearity of the window sum") {
    const auto f = [](double t) { return std::sin(t); };
    const auto g = [](double t) { return std::exp(0.3 * t); };
    const double a = 2.25, b = -0.75;
    const auto combo = [&](double t) { return a * f(t) + b * g(t); };
    const FracOrder order(0.6);
    const GridSpec grid(4.0, 256);
    for (double t : {0.5, 2.0, 7.3}) {
        const double lhs = fm_gl_derivative(combo, t, order, grid);
        const double rhs = a * fm_gl_derivative(f, t, order, grid) +
                           b * fm_gl_derivative(g, t, order, grid);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("shift equivariance for grid-multiple shifts") {
    const GridSpec grid(2.0, 128);
    const FracOrder order(0.5);
    const double s = 17.0 * grid.h;
    const auto f = [](double t) { return std::cos(0.7 * t) + t; };
    const auto shifted = [&](double t) { return f(t + s); };
    for (double t : {1.0, 3.3}) {
        // same samples, same weights: exact equality
        CHECK(fm_gl_derivative(shifted, t, order, grid) ==
              fm_gl_derivative(f, t + s, order, grid));
    }
}

TEST_CASE("constant rule converges at first order") {
    const FunctionSpec one = FunctionSpec::constant(1.0);
    const double target = kInvSqrtPi;
    std::vector<std::pair<double, double>> values;
    double fitted_c = 0.0;
    for (int k = 8; k <= 13; ++k) {
        const int N = 1 << k;
        const GridSpec grid(1.0, N);
        const double v = fm_gl_derivative(one, 0.0, FracOrder(0.5), grid);
        values.push_back({grid.h, v});
        const double err = std::fabs(v - target);
        if (k == 8) {
            fitted_c = err * N;
        }
        CHECK(err <= 1.10 * fitted_c / N);  // |value(N) - target| <= c/N
    }
    const double order = estimate_convergence_order(values);
    CHECK(order == doctest::Approx(1.0).epsilon(0.3));
}

TEST_CASE("classical operator matches its Mittag-Leffler form") {
    for (double t = 0.5; t <= 35.0; t += 1.5) {
        const double discrete =
            classical_gl_derivative(FunctionSpec::sine(), t, 0.5, 0.0, 8192);
        CHECK(std::fabs(discrete - classical_sin(t, 0.5)) <= 5e-3);
    }
}

TEST_CASE("classical operator at integer order") {
    const FunctionSpec lin = FunctionSpec::polynomial({0.0, 1.0});
    CHECK(classical_gl_derivative(lin, 3.0, 1.0, 0.0, 64) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("classical operator is only asymptotically periodic") {
    // t = 30 vs t = 30 + 2pi: close to each other and to sin(t + pi/4),
    // but the fixed-memory notion of exact periodicity does not apply
    const double c30 = classical_gl_derivative(FunctionSpec::sine(), 30.0, 0.5, 0.0, 8192);
    const double c36 = classical_gl_derivative(FunctionSpec::sine(), 30.0 + 2.0 * kPi, 0.5, 0.0, 8192);
    CHECK(std::fabs(c30 - c36) < 1e-2);
    CHECK(std::fabs(c30 - std::sin(30.0 + kPi / 4.0)) < 2e-2);
    CHECK(std::fabs(c36 - std::sin(30.0 + 2.0 * kPi + kPi / 4.0)) < 2e-2);
}

TEST_CASE("estimate_convergence_order on constructed data") {
    // exactly first order: v = V + c h
    std::vector<std::pair<double, double>> first = {
        {0.4, 1.0 + 0.4}, {0.2, 1.0 + 0.2}, {0.1, 1.0 + 0.1}};
    CHECK(estimate_convergence_order(first) == doctest::Approx(1.0).epsilon(1e-9));
    std::vector<std::pair<double, double>> second = {
        {0.4, 1.0 + 0.16}, {0.2, 1.0 + 0.04}, {0.1, 1.0 + 0.01}};
    CHECK(estimate_convergence_order(second) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("estimate_convergence_order validates its input") {
    CHECK_THROWS_AS(estimate_convergence_order({{0.2, 1.0}, {0.1, 1.0}}), GridError);
    CHECK_THROWS_AS(estimate_convergence_order({{0.4, 1.0}, {0.3, 1.1}, {0.1, 1.2}}), GridError);
    // already converged
    CHECK_THROWS_AS(estimate_convergence_order({{0.4, 1.0}, {0.2, 1.0}, {0.1, 1.0}}), GridError);
}

TEST_CASE("measured convergence order of the window sum is one") {
    const double t = 2.0, L = 30.0;
    std::vector<std::pair<double, double>> values;
    for (int N : {500, 1000, 2000}) {
        const GridSpec grid(L, N);
        values.push_back({grid.h, fm_gl_derivative(FunctionSpec::sine(), t, FracOrder(0.5), grid)});
    }
    const double order = estimate_convergence_order(values);
    CHECK(order == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS(fm_gl_derivative(FunctionSpec::sine(), 0.0, FracOrder(1.5), GridSpec(1.0, 2)),
                    GridError);
    CHECK_THROWS_AS(
        fm_gl_derivative_series(FunctionSpec::sine(), 1.0, 0.5, FracOrder(0.5), GridSpec(1.0, 64)),
        std::invalid_argument);
    CHECK_THROWS_AS(classical_gl_derivative(FunctionSpec::sine(), 1.0, 0.5, 2.0, 64),
                    std::invalid_argument);
    // f evaluation failures propagate as domain errors
    CHECK_THROWS_AS(
        fm_gl_derivative(FunctionSpec::expression("ln(t)"), 0.5, FracOrder(0.5), GridSpec(1.0, 64)),
        DomainError);
}
