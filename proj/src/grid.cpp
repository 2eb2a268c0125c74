#include "fmgl/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fmgl/errors.hpp"

namespace fmgl {

FracOrder::FracOrder(double a) : alpha(a) {
    if (!(a >= 0.0)) {
        throw std::invalid_argument("FracOrder: alpha must be >= 0");
    }
    m = static_cast<int>(std::floor(a)) + 1;  // m-1 <= alpha < m
}

bool FracOrder::is_integer() const { return alpha == std::floor(alpha); }

GridSpec::GridSpec(double memory_length, int window_size)
    : L(memory_length), N(window_size), h(memory_length / window_size) {
    if (!(memory_length > 0.0)) {
        throw std::invalid_argument("GridSpec: memory length must be > 0");
    }
    if (window_size < 1) {
        throw std::invalid_argument("GridSpec: window size must be >= 1");
    }
}

void GridSpec::require_covers(const FracOrder& order) const {
    const int needed = static_cast<int>(std::ceil(order.alpha)) + 2;
    if (N < needed) {
        std::ostringstream msg;
        msg << "window of " << N << " samples cannot cover order " << order.alpha
            << " (need N >= " << needed << ")";
        throw GridError(msg.str());
    }
}

WeightTable grunwald_weights(double alpha, int N) {
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("grunwald_weights: alpha must be >= 0");
    }
    if (N < 1) {
        throw std::invalid_argument("grunwald_weights: N must be >= 1");
    }
    WeightTable table;
    table.alpha = alpha;
    table.w.resize(N + 1);
    table.w[0] = 1.0;
    for (int k = 1; k <= N; ++k) {
        table.w[k] = table.w[k - 1] * ((k - 1 - alpha) / k);
    }
    return table;
}

} // namespace fmgl
