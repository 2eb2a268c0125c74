#include "fmgl/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "fmgl/closed_forms.hpp"
#include "fmgl/gl_derivative.hpp"

namespace fmgl {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}

std::vector<InterpolationRow> interpolation_curve(const FunctionSpec& f, double t,
                                                  double L,
                                                  const std::vector<double>& alphas) {
    if (alphas.empty()) {
        throw std::invalid_argument("interpolation_curve: need at least one alpha");
    }
    const int m = FracOrder(alphas.front()).m;
    for (double a : alphas) {
        if (FracOrder(a).m != m || FracOrder(a).is_integer()) {
            throw std::invalid_argument(
                "interpolation_curve: alphas must be non-integer with a common bracket m");
        }
    }
    std::vector<InterpolationRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        const auto closed = closed_form_derivative(f, t, a, L);
        const double value = closed
            ? *closed
            : fm_gl_derivative(f, t, FracOrder(a), GridSpec(L, 4096));
        const int side = (a > m - 0.5) ? m : m - 1;  // nearer integer order
        const double reference = f.derivative(side)(t);
        rows.push_back({a, value, reference, std::fabs(value - reference)});
    }
    return rows;
}

MemorySweepResult memory_sweep(const FunctionSpec& f, double alpha,
                               double t0, double t1, int samples,
                               const std::vector<double>& Ls,
                               int discrete_N) {
    if (samples < 2 || !(t1 > t0)) {
        throw std::invalid_argument("memory_sweep: need t1 > t0 and >= 2 samples");
    }
    for (std::size_t i = 1; i < Ls.size(); ++i) {
        if (!(Ls[i] > Ls[i - 1])) {
            throw std::invalid_argument("memory_sweep: memory lengths must increase");
        }
    }
    MemorySweepResult result;
    result.Ls = Ls;
    result.ts.resize(samples);
    const double dt = (t1 - t0) / (samples - 1);
    for (int j = 0; j < samples; ++j) {
        result.ts[j] = t0 + j * dt;
    }
    result.series.reserve(Ls.size());
    const bool use_closed = f.catalog() == Catalog::Sine;
    for (double L : Ls) {
        std::vector<double> row(samples);
        if (use_closed) {
            const SinCosCoeffs c = sincos_coeffs(alpha, L);
            for (int j = 0; j < samples; ++j) {
                row[j] = c.a * std::sin(result.ts[j] - L) + c.b * std::cos(result.ts[j] - L);
            }
        } else {
            const FracOrder order(alpha);
            const GridSpec grid(L, discrete_N);
            for (int j = 0; j < samples; ++j) {
                row[j] = fm_gl_derivative(f, result.ts[j], order, grid);
            }
        }
        result.series.push_back(std::move(row));
    }
    for (std::size_t i = 0; i + 1 < result.series.size(); ++i) {
        double sup = 0.0;
        for (int j = 0; j < samples; ++j) {
            sup = std::max(sup, std::fabs(result.series[i][j] - result.series[i + 1][j]));
        }
        result.sup_distances.push_back(sup);
    }
    return result;
}

NonperiodicityResult nonperiodicity_demo(double alpha, double t_max, int steps) {
    if (!(t_max > kTwoPi)) {
        throw std::invalid_argument("nonperiodicity_demo: t_max must exceed 2*pi");
    }
    if (steps < 8) {
        throw std::invalid_argument("nonperiodicity_demo: need at least 8 steps");
    }
    NonperiodicityResult result;
    const double h = t_max / steps;
    result.rows.reserve(steps);
    for (int i = 1; i <= steps; ++i) {
        const double t = i * h;
        const double cv = classical_sin(t, alpha);
        const double env = std::sin(t + alpha * kPi / 2.0);
        result.rows.push_back({t, cv, env, std::fabs(cv - env)});
    }

    // Companion defects over the last two periods [t_max - 4pi, t_max]:
    // pairs (t, t + 2pi) with t in [t_max - 4pi, t_max - 2pi]. The
    // fixed-memory closed form (memory length 30, matching the sweep demos)
    // is periodic to machine precision; the classical one is not.
    const double lo = t_max - 2.0 * kTwoPi;
    if (lo > 0.0) {
        const int probes = 256;
        double classical_defect = 0.0;
        double fm_defect = 0.0;
        const double fm_L = 30.0;
        const SinCosCoeffs c = sincos_coeffs(alpha, fm_L);
        for (int i = 0; i <= probes; ++i) {
            const double t = lo + (kTwoPi * i) / probes;
            classical_defect = std::max(
                classical_defect, std::fabs(classical_sin(t + kTwoPi, alpha) - classical_sin(t, alpha)));
            const double d1 = c.a * std::sin(t - fm_L) + c.b * std::cos(t - fm_L);
            const double d2 = c.a * std::sin(t + kTwoPi - fm_L) + c.b * std::cos(t + kTwoPi - fm_L);
            fm_defect = std::max(fm_defect, std::fabs(d2 - d1));
        }
        result.classical_defect = classical_defect;
        result.fm_defect = fm_defect;
    } else {
        result.classical_defect = 0.0;
        result.fm_defect = 0.0;
    }
    return result;
}

} // namespace fmgl
