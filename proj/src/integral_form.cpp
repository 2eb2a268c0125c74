#include "fmgl/integral_form.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fmgl/quadrature.hpp"
#include "fmgl/specfun.hpp"

namespace fmgl {

IntegralFormResult fm_gl_integral_form(const FunctionSpec& f, double t,
                                       const FracOrder& order, double L,
                                       int panels, double grading_ratio) {
    if (order.is_integer()) {
        throw std::invalid_argument(
            "fm_gl_integral_form: order must be non-integer (m-1 < alpha < m)");
    }
    if (!(L > 0.0)) {
        throw std::invalid_argument("fm_gl_integral_form: memory length must be > 0");
    }
    if (panels < 1) {
        throw std::invalid_argument("fm_gl_integral_form: panels must be >= 1");
    }
    if (!(grading_ratio > 0.0 && grading_ratio < 1.0)) {
        throw std::invalid_argument("fm_gl_integral_form: grading ratio must be in (0,1)");
    }

    const int m = order.m;
    const double alpha = order.alpha;

    IntegralFormResult result{0.0, !f.has_analytic_derivatives(), 0.0};
    if (result.used_finite_differences) {
        result.derivative_error_estimate =
            finite_difference_error_estimate(m + 1, std::max(1.0, std::fabs(f(t - L))));
    }

    double boundary = 0.0;
    for (int k = 0; k <= m; ++k) {
        boundary += f.derivative(k)(t - L) * std::pow(L, k - alpha) *
                    recip_gamma(k - alpha + 1.0);
    }

    const FunctionSpec f_top = f.derivative(m + 1);
    // Identically-zero top derivative (polynomials of degree <= m): the
    // boundary terms are the whole value.
    if (f_top.catalog() == Catalog::Constant && f_top.constant_value() == 0.0) {
        result.value = boundary;
        return result;
    }

    // Edges graded toward tau = t: distances L * ratio^i, stopping once a
    // panel would be narrower than machine scale (it then contributes
    // nothing the final panel does not already cover).
    std::vector<double> edges;
    edges.push_back(t - L);
    double dist = L;
    for (int i = 1; i < panels; ++i) {
        dist *= grading_ratio;
        if (dist < 1e-15 * L) {
            break;
        }
        edges.push_back(t - dist);
    }
    edges.push_back(t);

    const double kernel_power = m - alpha;  // in (0,1): continuous integrand
    const double q = integrate_panels(edges, 10, [&](double tau) {
        return std::pow(t - tau, kernel_power) * f_top(tau);
    });

    result.value = boundary + recip_gamma(m - alpha + 1.0) * q;
    return result;
}

} // namespace fmgl
