#pragma once

#include <cstddef>

namespace fmgl {

/// sin(pi*x) and cos(pi*x) with the argument reduced *before* multiplying
/// by pi, so sin_pi is exactly zero at every integer and cos_pi exactly
/// zero at every half-integer. Needed for the reflection identities.
double sin_pi(double x);
double cos_pi(double x);

/// Gamma function on the real line. Lanczos core for x >= 0.5, reflection
/// Gamma(x)Gamma(1-x) = pi/sin(pi x) below. Throws PoleError when x is
/// within 1e-12 of a non-positive integer. Overflows to +inf past ~171.6.
double gamma(double x);

/// 1/Gamma(x), the entire extension: returns exactly 0.0 at non-positive
/// integers. Total; never throws.
double recip_gamma(double x);

/// Parameters of a two-parameter Mittag-Leffler evaluation
/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha*k + beta).
struct MLQuery {
    double alpha;        ///< series parameter, > 0
    double beta;         ///< may be zero or negative
    double z;            ///< real argument
    double tol = 1e-12;  ///< absolute truncation target, > 0
};

/// Tunables for the Mittag-Leffler evaluation. The reflection threshold is
/// where the alpha = 2, z < 0 evaluation leaves the direct series: chosen
/// so the direct and reflection paths share an accurate overlap band
/// [-100, -25] that the tests cross-validate.
struct MLConfig {
    int term_cap = 10000;
    double alpha2_reflection_threshold = -25.0;
};

/// E_{alpha,beta}(z) to within q.tol (absolute).
///
/// Direct series with compensated summation; terms whose Gamma argument is
/// a non-positive integer contribute zero. For alpha = 2 with
/// z <= cfg.alpha2_reflection_threshold, where the direct series loses
/// digits to cancellation, switches to the reflection form
///   E_{2,b}(-x^2) = x^{1-b} cos(x + (1-b) pi/2)
///                   + sum_{k>=1} (-1)^{k+1} x^{-2k} / Gamma(b - 2k),
/// truncating the tail when recip_gamma kills it or terms fall below tol;
/// if the tail (an asymptotic series) bottoms out above tol, its exact sum
/// is computed instead from the incomplete-gamma integral it expands
/// (see reflection_tail in specfun.cpp).
///
/// Throws ConvergenceError if the direct series cannot reach tol within
/// cfg.term_cap terms and no reflection path applies.
double mittag_leffler(const MLQuery& q, const MLConfig& cfg = {});

inline double mittag_leffler(double alpha, double beta, double z, double tol = 1e-12) {
    return mittag_leffler(MLQuery{alpha, beta, z, tol});
}

} // namespace fmgl
