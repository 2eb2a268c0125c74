#pragma once

#include <functional>
#include <vector>

namespace fmgl {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached Gauss-Legendre rule (Newton iteration on the Legendre
/// polynomial; nodes accurate to machine precision). n in [1, 64].
const GaussRule& gauss_legendre(int n);

/// Composite quadrature of f over consecutive panels
/// [edges[0], edges[1]], [edges[1], edges[2]], ... with the n-point
/// Gauss rule on each panel, accumulated in fixed panel order.
double integrate_panels(const std::vector<double>& edges, int n,
                        const std::function<double(double)>& f);

} // namespace fmgl
