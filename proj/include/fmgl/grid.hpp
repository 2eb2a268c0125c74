#pragma once

#include <vector>

namespace fmgl {

/// Fractional order alpha >= 0 together with its integer bracket m,
/// the smallest integer with m-1 <= alpha < m (m = floor(alpha) + 1).
struct FracOrder {
    double alpha;
    int m;

    explicit FracOrder(double a);
    bool is_integer() const;
};

/// Uniform memory window: length L, sample count N, step h = L/N.
/// h is always derived; the constructor never takes a free step, so the
/// window is covered exactly with no partial cell.
struct GridSpec {
    double L;
    int N;
    double h;

    GridSpec(double memory_length, int window_size);

    /// Enforce N >= ceil(alpha) + 2 (window must cover the highest
    /// finite difference). Throws GridError.
    void require_covers(const FracOrder& order) const;
};

/// Grunwald coefficients w_k = (-1)^k binom(alpha, k), k = 0..N, built by
/// the multiplicative recurrence w_k = w_{k-1} (k-1-alpha)/k. For integer
/// alpha = m the recurrence is exact: w_k = 0 for all k > m.
struct WeightTable {
    double alpha;
    std::vector<double> w;

    int size() const { return static_cast<int>(w.size()) - 1; }
};

WeightTable grunwald_weights(double alpha, int N);

} // namespace fmgl
