#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fmgl/expr.hpp"

namespace fmgl {

/// Identity of a catalog entry, for dispatch to closed forms.
enum class Catalog { Sine, Cosine, Exponential, Power, Constant, Fourier, Polynomial };

/// An evaluable scalar function of time. Three variants:
///  - Catalog: named analytic functions with exact derivatives of every order
///  - Expression: parsed arithmetic expression in t (derivatives by central
///    finite differences)
///  - Samples: tabulated values, linear interpolation inside the grid hull
/// Immutable after construction; evaluation is pure and thread-safe.
class FunctionSpec {
public:
    enum class Kind { Catalog, Expression, Samples };

    double operator()(double t) const;

    /// The exact order-th derivative for Catalog variants. Expression and
    /// Samples variants return a finite-difference wrapper (capability
    /// downgraded accordingly). order = 0 returns *this.
    FunctionSpec derivative(int order = 1) const;

    /// True when derivative() is exact to every order.
    bool has_analytic_derivatives() const;

    Kind kind() const;
    std::optional<Catalog> catalog() const;

    /// Catalog payload accessors (only meaningful for matching catalog()):
    int power_exponent() const;
    double constant_value() const;
    const std::vector<double>& poly_coeffs() const;              // Polynomial
    const std::vector<double>& fourier_sin_coeffs() const;       // Fourier: sum c_j sin(j t)
    const std::vector<double>& fourier_cos_coeffs() const;       //          + d_j cos(j t), j = 1..
    std::string describe() const;

    static FunctionSpec sine();
    static FunctionSpec cosine();
    static FunctionSpec exponential();
    static FunctionSpec power(int n);
    static FunctionSpec constant(double c);
    static FunctionSpec fourier(std::vector<double> sin_coeffs, std::vector<double> cos_coeffs);
    static FunctionSpec polynomial(std::vector<double> coeffs);  // coeffs[k] * t^k
    static FunctionSpec expression(const std::string& src);     // parses; may throw ParseError
    static FunctionSpec expression(expr::NodePtr ast, std::string src);
    static FunctionSpec samples(std::vector<double> ts, std::vector<double> values);

    /// CLI argument convention: a known catalog name ("sin", "cos", "exp"),
    /// "t^N" for a power, a bare number for a constant; anything else is
    /// parsed as an expression.
    static FunctionSpec from_name(const std::string& name_or_expr);

    /// Expression AST, when kind() == Expression.
    expr::NodePtr ast() const;

    struct Impl;  // definition private to funcspec.cpp

private:
    explicit FunctionSpec(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// k-th derivative of f at t by the 2nd-order central difference stencil,
/// step balanced between truncation and roundoff (~eps^{1/(k+2)} * scale).
double finite_difference(const std::function<double(double)>& f, double t, int k);

/// A priori absolute error estimate of finite_difference at unit function
/// scale: ~eps^{2/(k+2)}, growing with the stencil width.
double finite_difference_error_estimate(int k, double scale = 1.0);

} // namespace fmgl
