#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace krein {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTol = 1e-10;

/// Base of the library's exception hierarchy. The three direct children
/// correspond to the CLI exit codes: validation -> 1, numeric -> 2, I/O -> 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or invariant of the input data.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Computation failed: divergence, inconsistency between redundant paths,
/// singular operators where invertibility was required.
class NumericError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// An epsilon-family grew without bound.
class DivergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// An epsilon-family neither settled nor grew monotonically.
class IndeterminateLimitError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Two redundant computation paths disagreed beyond their shared tolerance.
class ConsistencyError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A contraction has eigenvalue 1: the inverse Cayley image is a linear
/// relation, not the graph of an operator.
class NotAnOperatorError : public NumericError {
public:
    using NumericError::NumericError;
};

/// z sits on (or numerically at) the spectrum of the operator being resolved.
class SpectralPointError : public NumericError {
public:
    using NumericError::NumericError;
};

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace krein
