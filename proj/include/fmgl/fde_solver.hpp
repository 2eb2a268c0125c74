#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "fmgl/funcspec.hpp"
#include "fmgl/gl_derivative.hpp"
#include "fmgl/grid.hpp"

namespace fmgl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Solution values on [t0-L, t0] at step h: the initial data a fixed-memory
/// fractional equation needs (the operator at t0 reads back to t0-L), in
/// the same way a delay equation needs an initial function. N+1 samples,
/// the last one at t0.
struct HistorySegment {
    double t0;
    double L;
    double h;
    std::vector<Vec> samples;

    static HistorySegment from_function(const std::vector<FunctionSpec>& components,
                                        double t0, const GridSpec& grid);
    static HistorySegment from_samples(double t0, const GridSpec& grid,
                                       std::vector<Vec> samples);

    int window_size() const { return static_cast<int>(samples.size()) - 1; }
    int dimension() const { return samples.empty() ? 0 : static_cast<int>(samples.front().size()); }
};

/// Vector time series produced by the steppers: states[i] at t0 + i*h,
/// states[0] equal to the last history sample.
struct Trajectory {
    double t0;
    double h;
    std::vector<Vec> states;
    HistorySegment history;

    double time_at(int i) const { return t0 + i * h; }
    int size() const { return static_cast<int>(states.size()); }
    int dimension() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }

    /// One component, history included, as a Samples FunctionSpec on
    /// [t0-L, end] - lets the discrete operator consume solved paths.
    FunctionSpec component_function(int dim) const;
};

/// The planar system whose exact solution is c (cos t, sin t):
/// matrix [[a, -b], [b, a]] with (a, b) the sine/cosine derivative
/// coefficients at memory length L. a I + b J commutes with every planar
/// rotation.
struct RotationSystem {
    double a;
    double b;

    Mat matrix() const;
    static RotationSystem for_order(double alpha, double L);
};

/// Implicit stepping of D^alpha x = A x on the history's grid:
/// (I - h^alpha A) x_n = -sum_{k=1}^{N} w_k x_{n-k}, so the discrete
/// fixed-memory operator applied at t_n equals A x_n exactly. The matrix
/// is factored once; throws SingularMatrixError when its condition
/// estimate exceeds 1e14. t_end rounds up to the nearest grid node.
Trajectory solve_linear(const Mat& A, const HistorySegment& hist,
                        double alpha, double t_end);

/// Nonlinear variant: each step solves x = h^alpha F(x) - sum_{k>=1} w_k x_{n-k}
/// by fixed-point iteration seeded with x_{n-1}; converges for
/// h^alpha Lip(F) < 1 (reduce h otherwise). Throws SolverConvergenceError
/// with the step index and last residual after fp_max iterations.
Trajectory solve_nonlinear(const std::function<Vec(const Vec&)>& F,
                           const HistorySegment& hist, double alpha,
                           double t_end, double fp_tol = 1e-12, int fp_max = 100);

/// Max over overlapping samples of |x(t+T) - x(t)| (infinity norm over
/// components). T must be an integer multiple of the step within 1e-9;
/// throws GridError otherwise, rather than interpolating.
double periodicity_defect(const Trajectory& traj, double T);
double periodicity_defect(const Series& series, double T);

} // namespace fmgl
