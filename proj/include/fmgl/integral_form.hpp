#pragma once

#include "fmgl/funcspec.hpp"
#include "fmgl/grid.hpp"

namespace fmgl {

struct IntegralFormResult {
    double value;
    bool used_finite_differences;       ///< derivatives came from FD stencils
    double derivative_error_estimate;   ///< 0 when derivatives are analytic
};

/// Independent evaluation of the fixed-memory derivative through its
/// integral representation (non-integer order, m-1 < alpha < m,
/// f at least (m+1)-differentiable):
///
///   sum_{k=0}^{m} f^{(k)}(t-L) L^{k-alpha} / Gamma(k-alpha+1)
///   + 1/Gamma(m-alpha+1) * int_{t-L}^{t} (t-tau)^{m-alpha} f^{(m+1)}(tau) dtau
///
/// The integrand is continuous (m-alpha > 0) but its derivatives blow up at
/// tau = t, so the quadrature uses `panels` panels graded geometrically
/// toward t (ratio 0.7) with a fixed 10-point Gauss rule per panel.
/// Derivatives are exact for catalog functions; otherwise central finite
/// differences back them, and derivative_error_estimate reports the FD
/// error model so callers can warn when it exceeds their needs.
IntegralFormResult fm_gl_integral_form(const FunctionSpec& f, double t,
                                       const FracOrder& order, double L,
                                       int panels, double grading_ratio = 0.7);

} // namespace fmgl
