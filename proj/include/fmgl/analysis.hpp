#pragma once

#include <vector>

#include "fmgl/funcspec.hpp"

namespace fmgl {

struct InterpolationRow {
    double alpha;
    double value;      ///< fixed-memory derivative at alpha (closed form when available)
    double reference;  ///< f^{(m)}(t) or f^{(m-1)}(t), whichever integer alpha is nearer
    double abs_error;
};

/// How the fractional operator interpolates the integer-order ones: one row
/// per alpha, paired with the integer-order derivative it should approach.
/// All alphas must share the same integer bracket m.
std::vector<InterpolationRow> interpolation_curve(const FunctionSpec& f, double t,
                                                  double L,
                                                  const std::vector<double>& alphas);

struct MemorySweepResult {
    std::vector<double> ts;
    std::vector<double> Ls;
    std::vector<std::vector<double>> series;  ///< series[i][j] = derivative at Ls[i], ts[j]
    std::vector<double> sup_distances;        ///< sup |series[i] - series[i+1]|
};

/// Derivative series of f for each memory length in Ls (closed form for
/// sine, discrete operator otherwise), with the pairwise sup-distance
/// between consecutive lengths: how much the choice of L still matters.
MemorySweepResult memory_sweep(const FunctionSpec& f, double alpha,
                               double t0, double t1, int samples,
                               const std::vector<double>& Ls,
                               int discrete_N = 4096);

struct NonperiodicityRow {
    double t;
    double classical_value;  ///< classical (growing-memory) derivative of sin
    double envelope;         ///< sin(t + alpha pi/2)
    double difference;       ///< |classical_value - envelope|
};

struct NonperiodicityResult {
    std::vector<NonperiodicityRow> rows;
    double classical_defect;  ///< periodicity defect of the classical series, last two periods
    double fm_defect;         ///< same for the fixed-memory closed form on the same grid
};

/// The classical operator's non-periodicity demo: the classical derivative
/// of sine decays onto the periodic envelope but never equals it, while
/// the fixed-memory derivative is exactly periodic. Grid starts at t = h
/// (the classical closed form needs t > 0).
NonperiodicityResult nonperiodicity_demo(double alpha, double t_max, int steps);

} // namespace fmgl
