#include "fmgl/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace fmgl {

namespace {
void require_positive_L(double L) {
    if (!(L > 0.0)) {
        throw std::invalid_argument("memory length L must be > 0");
    }
}
}  // namespace

double d_constant(double C, double alpha, double L) {
    require_positive_L(L);
    return C * recip_gamma(1.0 - alpha) * std::pow(L, -alpha);
}

double d_power(int n, double t, double alpha, double L) {
    if (n < 0) {
        throw std::invalid_argument("d_power: exponent must be >= 0");
    }
    require_positive_L(L);
    // sum_k n!/(n-k)! L^{k-alpha} (t-L)^{n-k} / Gamma(k-alpha+1)
    double sum = 0.0;
    double falling = 1.0;  // n!/(n-k)! built as n (n-1) ... (n-k+1)
    for (int k = 0; k <= n; ++k) {
        sum += falling * std::pow(L, k - alpha) * std::pow(t - L, n - k) *
               recip_gamma(k - alpha + 1.0);
        falling *= n - k;
    }
    return sum;
}

double d_exp(double t, double alpha, double L) {
    require_positive_L(L);
    return std::exp(t - L) * std::pow(L, -alpha) * mittag_leffler(1.0, 1.0 - alpha, L, 1e-13);
}

SinCosCoeffs sincos_coeffs(double alpha, double L, const MLConfig& cfg) {
    require_positive_L(L);
    const double z = -L * L;
    const double a = std::pow(L, -alpha) * mittag_leffler({2.0, 1.0 - alpha, z, 1e-13}, cfg);
    const double b = std::pow(L, 1.0 - alpha) * mittag_leffler({2.0, 2.0 - alpha, z, 1e-13}, cfg);
    return {a, b};
}

double d_sin(double t, double alpha, double L) {
    const SinCosCoeffs c = sincos_coeffs(alpha, L);
    return c.a * std::sin(t - L) + c.b * std::cos(t - L);
}

double d_cos(double t, double alpha, double L) {
    const SinCosCoeffs c = sincos_coeffs(alpha, L);
    return c.a * std::cos(t - L) - c.b * std::sin(t - L);
}

double classical_sin(double t, double alpha) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("classical_sin: t must be > 0");
    }
    return std::pow(t, 1.0 - alpha) * mittag_leffler(2.0, 2.0 - alpha, -t * t, 1e-13);
}

std::optional<double> closed_form_derivative(const FunctionSpec& f, double t,
                                             double alpha, double L) {
    const auto cat = f.catalog();
    if (!cat) {
        return std::nullopt;
    }
    switch (*cat) {
    case Catalog::Sine:
        return d_sin(t, alpha, L);
    case Catalog::Cosine:
        return d_cos(t, alpha, L);
    case Catalog::Exponential:
        return d_exp(t, alpha, L);
    case Catalog::Power:
        return d_power(f.power_exponent(), t, alpha, L);
    case Catalog::Constant:
        return d_constant(f.constant_value(), alpha, L);
    case Catalog::Polynomial: {
        double sum = 0.0;
        const auto& coeffs = f.poly_coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] != 0.0) {
                sum += coeffs[k] * d_power(static_cast<int>(k), t, alpha, L);
            }
        }
        return sum;
    }
    case Catalog::Fourier:
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace fmgl
