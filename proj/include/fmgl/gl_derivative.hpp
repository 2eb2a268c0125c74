#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fmgl/funcspec.hpp"
#include "fmgl/grid.hpp"

namespace fmgl {

/// Uniformly sampled scalar time series: values[i] at t0 + i*h.
struct Series {
    double t0 = 0.0;
    double h = 0.0;
    std::vector<double> values;

    double time_at(int i) const { return t0 + i * h; }
    int size() const { return static_cast<int>(values.size()); }
};

/// Fixed-memory-window Grunwald-Letnikov derivative at a single point:
///   h^{-alpha} sum_{k=0}^{N} w_k f(t - k h),  h = L/N.
/// The window always spans exactly [t-L, t]. First-order accurate in h.
double fm_gl_derivative(const std::function<double(double)>& f, double t,
                        const FracOrder& order, const GridSpec& grid);
double fm_gl_derivative(const FunctionSpec& f, double t,
                        const FracOrder& order, const GridSpec& grid);

/// Derivative sampled on the grid t0, t0+h, ... while <= t1. f is sampled
/// once per node of [t0-L, t1] and the weight window slides over the shared
/// samples, so outputs at t and t+T reuse identical samples whenever T is a
/// grid multiple. Cost O(count * N); the dot products are a discrete
/// convolution, so an FFT evaluation would cut this to O((count+N) log) if
/// ever needed.
Series fm_gl_derivative_series(const std::function<double(double)>& f,
                               double t0, double t1,
                               const FracOrder& order, const GridSpec& grid);
Series fm_gl_derivative_series(const FunctionSpec& f, double t0, double t1,
                               const FracOrder& order, const GridSpec& grid);

/// Classical growing-memory derivative with lower terminal a:
///   h^{-alpha} sum_{k=0}^{steps} w_k f(t - k h),  h = (t-a)/steps.
double classical_gl_derivative(const std::function<double(double)>& f, double t,
                               double alpha, double a, int steps);
double classical_gl_derivative(const FunctionSpec& f, double t,
                               double alpha, double a, int steps);

/// Empirical convergence order from the last three entries of a sequence of
/// (h, value) pairs with h halving: log2(|v_h - v_{h/2}| / |v_{h/2} - v_{h/4}|).
/// Throws GridError if fewer than 3 entries, if the steps do not halve, or
/// if the differences are below 1e-14 (already converged).
double estimate_convergence_order(const std::vector<std::pair<double, double>>& values_at);

} // namespace fmgl
