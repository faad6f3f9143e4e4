#pragma once

// Shared aliases and error types for the distribution market toolkit.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace dmkt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TopologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    double residual = 0.0;
    ConvergenceError(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dmkt
