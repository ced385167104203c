#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ncszego {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using Index = Eigen::Index;

// A Gram / chain matrix failed the pivoted Cholesky test.
struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

// A matrix tuple (or product of norms) is outside the open unit ball.
struct NotInBall : std::runtime_error {
    explicit NotInBall(const std::string& what) : std::runtime_error(what) {}
};

// A series truncation cannot reach the requested tolerance within the level cap.
struct ToleranceUnreachable : std::runtime_error {
    explicit ToleranceUnreachable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncszego
