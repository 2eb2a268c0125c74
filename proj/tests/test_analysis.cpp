#include <doctest.h>

#include <cmath>

#include "fmgl/analysis.hpp"
#include "fmgl/closed_forms.hpp"

using namespace fmgl;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("interpolation curve approaches the first derivative") {
    const auto rows = interpolation_curve(FunctionSpec::sine(), 2.0, 10.0, {0.9, 0.99, 0.999});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.reference == std::cos(2.0));
    }
    CHECK(rows[0].abs_error > rows[1].abs_error);
    CHECK(rows[1].abs_error > rows[2].abs_error);
    CHECK(rows[2].abs_error < 2e-3);
}

TEST_CASE("interpolation curve approaches the function itself") {
    const auto rows = interpolation_curve(FunctionSpec::sine(), 2.0, 10.0, {0.1, 0.01, 0.001});
    for (const auto& row : rows) {
        CHECK(row.reference == std::sin(2.0));
    }
    CHECK(rows[0].abs_error > rows[1].abs_error);
    CHECK(rows[1].abs_error > rows[2].abs_error);
}

TEST_CASE("interpolation curve of a constant uses the constant rule") {
    const auto rows = interpolation_curve(FunctionSpec::constant(3.0), 5.0, 4.0, {0.5});
    CHECK(rows[0].value == doctest::Approx(d_constant(3.0, 0.5, 4.0)).epsilon(1e-14));
}

TEST_CASE("interpolation curve validates the alpha family") {
    CHECK_THROWS_AS(interpolation_curve(FunctionSpec::sine(), 1.0, 10.0, {0.5, 1.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(interpolation_curve(FunctionSpec::sine(), 1.0, 10.0, {1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(interpolation_curve(FunctionSpec::sine(), 1.0, 10.0, {}),
                    std::invalid_argument);
}

TEST_CASE("memory sweep distances shrink as L grows") {
    const auto result = memory_sweep(FunctionSpec::sine(), 0.5, 0.0, 4.0 * kPi, 200,
                                     {10.0, 20.0, 30.0, 60.0});
    REQUIRE(result.sup_distances.size() == 3);
    CHECK(result.sup_distances[0] > result.sup_distances[1]);
    CHECK(result.sup_distances[1] > result.sup_distances[2]);
    // closed form backs the sine sweep
    CHECK(result.series[2][0] == doctest::Approx(d_sin(0.0, 0.5, 30.0)).epsilon(1e-13));
}

TEST_CASE("memory sweep of a constant is flat per L") {
    const auto result =
        memory_sweep(FunctionSpec::constant(2.0), 0.5, 0.0, 5.0, 50, {2.0, 4.0}, 512);
    for (const auto& series : result.series) {
        for (double v : series) {
            CHECK(v == series.front());
        }
    }
    // series differ only by the L-dependent constant
    CHECK(result.series[0][0] == doctest::Approx(d_constant(2.0, 0.5, 2.0)).epsilon(2e-3));
    CHECK(result.series[1][0] == doctest::Approx(d_constant(2.0, 0.5, 4.0)).epsilon(2e-3));
}

TEST_CASE("nonperiodicity demo: transient decays onto the envelope") {
    const auto result = nonperiodicity_demo(0.5, 35.0, 3500);
    REQUIRE(result.rows.size() == 3500);

    double at2 = 0.0, at30 = 0.0;
    for (const auto& row : result.rows) {
        if (std::fabs(row.t - 2.0) < 1e-9) {
            at2 = row.difference;
        }
        if (std::fabs(row.t - 30.0) < 1e-9) {
            at30 = row.difference;
        }
    }
    // measured transient: 6.83e-2 at t=2 vs 1.7e-3 at t=30 (40x contrast)
    CHECK(at2 == doctest::Approx(0.068254).epsilon(1e-3));
    CHECK(at2 >= 5e-2);
    CHECK(at30 <= 2e-2);
    CHECK(at2 >= 10.0 * at30);
}

TEST_CASE("nonperiodicity demo defect contrast") {
    const auto result = nonperiodicity_demo(0.5, 6.0 * kPi, 1024);
    CHECK(result.classical_defect > 1e-2);
    CHECK(result.fm_defect <= 1e-12);
}

TEST_CASE("demo at alpha = 1 is plain cosine") {
    const auto result = nonperiodicity_demo(1.0, 8.0, 64);
    for (const auto& row : result.rows) {
        CHECK(row.classical_value == doctest::Approx(std::cos(row.t)).epsilon(1e-12));
        CHECK(row.difference <= 1e-12);
    }
}

TEST_CASE("analysis tables are deterministic") {
    const auto a = memory_sweep(FunctionSpec::sine(), 0.5, 0.0, 6.0, 64, {10.0, 20.0});
    const auto b = memory_sweep(FunctionSpec::sine(), 0.5, 0.0, 6.0, 64, {10.0, 20.0});
    CHECK(a.series == b.series);
    CHECK(a.sup_distances == b.sup_distances);
}
