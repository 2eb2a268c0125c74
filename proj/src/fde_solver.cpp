#include "fmgl/fde_solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fmgl/closed_forms.hpp"
#include "fmgl/errors.hpp"

namespace fmgl {

namespace {

int steps_to(double t0, double h, double t_end) {
    if (!(t_end > t0)) {
        throw std::invalid_argument("solver: t_end must be past the history end t0");
    }
    // round t_end up to the nearest grid node
    return static_cast<int>(std::ceil((t_end - t0) / h - 1e-9));
}

int period_in_steps(double T, double h) {
    const double q = T / h;
    const double p = std::nearbyint(q);
    if (!(p >= 1.0) || std::fabs(q - p) > 1e-9) {
        std::ostringstream msg;
        msg << "period " << T << " is not an integer multiple of step " << h;
        throw GridError(msg.str());
    }
    return static_cast<int>(p);
}

}  // namespace

HistorySegment HistorySegment::from_function(const std::vector<FunctionSpec>& components,
                                             double t0, const GridSpec& grid) {
    if (components.empty()) {
        throw std::invalid_argument("history: need at least one component");
    }
    HistorySegment hist;
    hist.t0 = t0;
    hist.L = grid.L;
    hist.h = grid.h;
    hist.samples.resize(grid.N + 1);
    const double start = t0 - grid.L;
    for (int j = 0; j <= grid.N; ++j) {
        Vec x(components.size());
        const double tj = start + j * grid.h;
        for (std::size_t d = 0; d < components.size(); ++d) {
            x[static_cast<int>(d)] = components[d](tj);
        }
        hist.samples[j] = std::move(x);
    }
    return hist;
}

HistorySegment HistorySegment::from_samples(double t0, const GridSpec& grid,
                                            std::vector<Vec> samples) {
    if (static_cast<int>(samples.size()) != grid.N + 1) {
        std::ostringstream msg;
        msg << "history: expected " << grid.N + 1 << " samples covering [t0-L, t0], got "
            << samples.size();
        throw std::invalid_argument(msg.str());
    }
    for (const Vec& s : samples) {
        if (s.size() != samples.front().size()) {
            throw std::invalid_argument("history: inconsistent sample dimensions");
        }
    }
    HistorySegment hist;
    hist.t0 = t0;
    hist.L = grid.L;
    hist.h = grid.h;
    hist.samples = std::move(samples);
    return hist;
}

FunctionSpec Trajectory::component_function(int dim) const {
    const int N = history.window_size();
    std::vector<double> ts, vals;
    ts.reserve(N + states.size());
    vals.reserve(N + states.size());
    const double start = t0 - history.L;
    for (int j = 0; j < N; ++j) {  // history up to (not including) t0
        ts.push_back(start + j * h);
        vals.push_back(history.samples[j][dim]);
    }
    for (std::size_t i = 0; i < states.size(); ++i) {  // states from t0 on
        ts.push_back(t0 + static_cast<double>(i) * h);
        vals.push_back(states[i][dim]);
    }
    return FunctionSpec::samples(std::move(ts), std::move(vals));
}

Mat RotationSystem::matrix() const {
    Mat A(2, 2);
    A << a, -b, b, a;
    return A;
}

RotationSystem RotationSystem::for_order(double alpha, double L) {
    const SinCosCoeffs c = sincos_coeffs(alpha, L);
    return {c.a, c.b};
}

Trajectory solve_linear(const Mat& A, const HistorySegment& hist,
                        double alpha, double t_end) {
    const int d = hist.dimension();
    if (A.rows() != d || A.cols() != d) {
        throw std::invalid_argument("solve_linear: matrix dimension does not match history");
    }
    const int N = hist.window_size();
    const double h = hist.h;
    const WeightTable wt = grunwald_weights(alpha, N);
    const double h_alpha = std::pow(h, alpha);

    const Mat M = Mat::Identity(d, d) - h_alpha * A;
    Eigen::PartialPivLU<Mat> lu(M);
    if (!(lu.rcond() > 1e-14)) {
        throw SingularMatrixError("solve_linear: I - h^alpha A is numerically singular");
    }

    const int steps = steps_to(hist.t0, h, t_end);
    std::vector<Vec> all = hist.samples;  // all[N + n] is the state at step n
    all.reserve(all.size() + steps);
    Vec rhs(d);
    for (int n = 1; n <= steps; ++n) {
        rhs.setZero();
        for (int k = 1; k <= N; ++k) {
            rhs.noalias() -= wt.w[k] * all[N + n - k];
        }
        all.push_back(lu.solve(rhs));
    }

    Trajectory traj;
    traj.t0 = hist.t0;
    traj.h = h;
    traj.history = hist;
    traj.states.assign(all.begin() + N, all.end());
    return traj;
}

Trajectory solve_nonlinear(const std::function<Vec(const Vec&)>& F,
                           const HistorySegment& hist, double alpha,
                           double t_end, double fp_tol, int fp_max) {
    if (!(fp_tol > 0.0) || fp_max < 1) {
        throw std::invalid_argument("solve_nonlinear: bad fixed-point controls");
    }
    const int N = hist.window_size();
    const double h = hist.h;
    const WeightTable wt = grunwald_weights(alpha, N);
    const double h_alpha = std::pow(h, alpha);

    const int steps = steps_to(hist.t0, h, t_end);
    std::vector<Vec> all = hist.samples;
    all.reserve(all.size() + steps);
    const int d = hist.dimension();
    Vec window(d);
    for (int n = 1; n <= steps; ++n) {
        window.setZero();
        for (int k = 1; k <= N; ++k) {
            window.noalias() -= wt.w[k] * all[N + n - k];
        }
        Vec x = all[N + n - 1];  // seed with the previous state
        double residual = 0.0;
        bool converged = false;
        for (int j = 0; j < fp_max; ++j) {
            Vec next = h_alpha * F(x) + window;
            residual = (next - x).lpNorm<Eigen::Infinity>();
            x = std::move(next);
            if (residual <= fp_tol) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            std::ostringstream msg;
            msg << "fixed-point iteration failed at step " << n << " (t = "
                << hist.t0 + n * h << "), last residual " << residual
                << "; reduce the step h";
            throw SolverConvergenceError(msg.str(), n, residual);
        }
        all.push_back(std::move(x));
    }

    Trajectory traj;
    traj.t0 = hist.t0;
    traj.h = h;
    traj.history = hist;
    traj.states.assign(all.begin() + N, all.end());
    return traj;
}

double periodicity_defect(const Trajectory& traj, double T) {
    const int p = period_in_steps(T, traj.h);
    if (traj.size() <= p) {
        throw GridError("periodicity_defect: trajectory shorter than one period");
    }
    double defect = 0.0;
    for (int i = 0; i + p < traj.size(); ++i) {
        defect = std::max(defect,
                          (traj.states[i + p] - traj.states[i]).lpNorm<Eigen::Infinity>());
    }
    return defect;
}

double periodicity_defect(const Series& series, double T) {
    const int p = period_in_steps(T, series.h);
    if (series.size() <= p) {
        throw GridError("periodicity_defect: series shorter than one period");
    }
    double defect = 0.0;
    for (int i = 0; i + p < series.size(); ++i) {
        defect = std::max(defect, std::fabs(series.values[i + p] - series.values[i]));
    }
    return defect;
}

} // namespace fmgl
