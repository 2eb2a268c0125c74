#pragma once

#include <stdexcept>
#include <string>

namespace fmgl {

/// Base class for failures of the numerical routines (CLI exit code 3).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma evaluated at (or within 1e-12 of) a non-positive integer.
class PoleError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A series failed to reach its truncation target within the term cap.
class ConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Function evaluated outside its domain (ln/sqrt of a negative number,
/// sample query outside the grid hull, ...).
class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Grid constraint violated: bad window size, period not a grid multiple,
/// step sequence that does not halve, already-converged Richardson data.
class GridError : public NumericError {
public:
    using NumericError::NumericError;
};

class SingularMatrixError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Fixed-point iteration failed in the time stepper (CLI exit code 4).
class SolverConvergenceError : public std::runtime_error {
public:
    SolverConvergenceError(const std::string& what, int step, double residual)
        : std::runtime_error(what), step_(step), residual_(residual) {}
    int step() const { return step_; }
    double residual() const { return residual_; }

private:
    int step_;
    double residual_;
};

/// Expression syntax or identifier error, with byte offset into the source
/// and a description of what was expected.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset, std::string expected)
        : std::invalid_argument(what), offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace fmgl
