#pragma once

#include <optional>

#include "fmgl/funcspec.hpp"
#include "fmgl/specfun.hpp"

namespace fmgl {

/// Coefficients of the fixed-memory derivative of sine/cosine:
///   D^alpha sin(t) = a sin(t-L) + b cos(t-L)
///   D^alpha cos(t) = a cos(t-L) - b sin(t-L)
/// with a = L^{-alpha} E_{2,1-alpha}(-L^2), b = L^{1-alpha} E_{2,2-alpha}(-L^2).
/// At alpha = 0 this reduces to (cos L, sin L), at alpha = 1 to (-sin L, cos L).
struct SinCosCoeffs {
    double a;
    double b;
};

/// Fixed-memory derivative of the constant C: C / (L^alpha Gamma(1-alpha)).
/// recip_gamma makes integer alpha exact (value 0 for alpha = 1, 2, ...).
double d_constant(double C, double alpha, double L);

/// Fixed-memory derivative of t^n:
///   sum_{k=0}^{n} n! L^{k-alpha} (t-L)^{n-k} / ((n-k)! Gamma(k-alpha+1)).
double d_power(int n, double t, double alpha, double L);

/// Fixed-memory derivative of e^t: e^{t-L} L^{-alpha} E_{1,1-alpha}(L).
double d_exp(double t, double alpha, double L);

SinCosCoeffs sincos_coeffs(double alpha, double L, const MLConfig& cfg = {});

double d_sin(double t, double alpha, double L);
double d_cos(double t, double alpha, double L);

/// Classical (growing-memory, lower terminal 0) derivative of sine:
///   t^{1-alpha} E_{2,2-alpha}(-t^2), t > 0.
/// Not periodic; tends to sin(t + alpha pi/2) as t grows.
double classical_sin(double t, double alpha);

/// Closed-form fixed-memory derivative of a catalog function, when one
/// exists (constant, power, polynomial, exp, sine, cosine).
std::optional<double> closed_form_derivative(const FunctionSpec& f, double t,
                                             double alpha, double L);

} // namespace fmgl
