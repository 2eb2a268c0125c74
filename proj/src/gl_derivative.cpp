#include "fmgl/gl_derivative.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fmgl/errors.hpp"

namespace fmgl {

namespace {

// Kahan-compensated window sum h^{-alpha} sum_k w_k f(t - k h). Terms with
// an exactly zero weight are skipped, which keeps integer orders bitwise
// equal to the plain finite differences they reduce to (alpha = 1 is
// literally (f(t) - f(t-h)) / h, alpha = 0 is f(t)).
double window_sum(const std::vector<double>& w, const std::function<double(double)>& f,
                  double t, double h, double alpha) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0.0) {
            continue;
        }
        const double y = w[k] * f(t - k * h) - comp;
        const double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    }
    return sum / std::pow(h, alpha);
}

double dot_window(const std::vector<double>& w, const std::vector<double>& samples,
                  std::size_t top, double inv_scale) {
    // samples[top] pairs with w[0], samples[top-k] with w[k]
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0.0) {
            continue;
        }
        const double y = w[k] * samples[top - k] - comp;
        const double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    }
    return sum * inv_scale;
}

}  // namespace

double fm_gl_derivative(const std::function<double(double)>& f, double t,
                        const FracOrder& order, const GridSpec& grid) {
    grid.require_covers(order);
    const WeightTable wt = grunwald_weights(order.alpha, grid.N);
    return window_sum(wt.w, f, t, grid.h, order.alpha);
}

double fm_gl_derivative(const FunctionSpec& f, double t,
                        const FracOrder& order, const GridSpec& grid) {
    return fm_gl_derivative([&f](double x) { return f(x); }, t, order, grid);
}

Series fm_gl_derivative_series(const std::function<double(double)>& f,
                               double t0, double t1,
                               const FracOrder& order, const GridSpec& grid) {
    if (!(t1 > t0)) {
        throw std::invalid_argument("fm_gl_derivative_series: need t1 > t0");
    }
    grid.require_covers(order);
    const double h = grid.h;
    const int N = grid.N;
    const int count = static_cast<int>(std::floor((t1 - t0) / h * (1.0 + 1e-12))) + 1;

    // one f sample per grid node of [t0-L, t1]; every output reuses them
    std::vector<double> samples(N + count);
    const double start = t0 - grid.L;
    for (int j = 0; j < N + count; ++j) {
        samples[j] = f(start + j * h);
    }
    // output i sits at index N+i; sample j == N+i-k pairs with weight w_k
    const WeightTable wt = grunwald_weights(order.alpha, N);
    const double inv_scale = 1.0 / std::pow(h, order.alpha);
    Series out;
    out.t0 = t0;
    out.h = h;
    out.values.resize(count);
    for (int i = 0; i < count; ++i) {
        out.values[i] = dot_window(wt.w, samples, N + i, inv_scale);
    }
    return out;
}

Series fm_gl_derivative_series(const FunctionSpec& f, double t0, double t1,
                               const FracOrder& order, const GridSpec& grid) {
    return fm_gl_derivative_series([&f](double x) { return f(x); }, t0, t1, order, grid);
}

double classical_gl_derivative(const std::function<double(double)>& f, double t,
                               double alpha, double a, int steps) {
    if (!(t > a)) {
        throw std::invalid_argument("classical_gl_derivative: need t > terminal a");
    }
    if (steps < 1) {
        throw std::invalid_argument("classical_gl_derivative: steps must be >= 1");
    }
    const double h = (t - a) / steps;
    const WeightTable wt = grunwald_weights(alpha, steps);
    return window_sum(wt.w, f, t, h, alpha);
}

double classical_gl_derivative(const FunctionSpec& f, double t,
                               double alpha, double a, int steps) {
    return classical_gl_derivative([&f](double x) { return f(x); }, t, alpha, a, steps);
}

double estimate_convergence_order(const std::vector<std::pair<double, double>>& values_at) {
    if (values_at.size() < 3) {
        throw GridError("estimate_convergence_order: need >= 3 (h, value) entries");
    }
    for (std::size_t i = 1; i < values_at.size(); ++i) {
        const double ratio = values_at[i - 1].first / values_at[i].first;
        if (std::fabs(ratio - 2.0) > 1e-9 * 2.0) {
            std::ostringstream msg;
            msg << "estimate_convergence_order: steps must halve (got ratio " << ratio << ")";
            throw GridError(msg.str());
        }
    }
    const std::size_t last = values_at.size() - 1;
    const double d1 = std::fabs(values_at[last - 2].second - values_at[last - 1].second);
    const double d2 = std::fabs(values_at[last - 1].second - values_at[last].second);
    if (d1 < 1e-14 || d2 < 1e-14) {
        throw GridError("estimate_convergence_order: differences below 1e-14, already converged");
    }
    return std::log2(d1 / d2);
}

} // namespace fmgl
