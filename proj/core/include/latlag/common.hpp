#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latlag {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// Simulated state exceeded the divergence guard.
struct NotStationaryError : Error {
    long step;
    explicit NotStationaryError(long step_)
        : Error("trajectory diverged at step " + std::to_string(step_)), step(step_) {}
};

struct SingularSystemError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct InsufficientLagsError : Error {
    using Error::Error;
};

struct NotConvergedError : Error {
    using Error::Error;
};

struct CsvError : Error {
    long line;
    CsvError(const std::string& msg, long line_)
        : Error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

/// vec operator: stacks columns of m into a vector.
inline Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix kron(const Matrix& a, const Matrix& b);

/// Permutation with commutation(p) * vec(M) == vec(M^T) for p x p M.
Matrix commutation(int p);

}  // namespace latlag
