#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace sdqm::par {

/// Serial reference kernels, kept for testing the OpenMP versions
/// against. The parallel entry points fall back to these below
/// `parallel_threshold()` where thread startup would dominate.

namespace serial {
Eigen::MatrixXd matmul(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
/// V diag(f(lambda)) V^T
Eigen::MatrixXd spectral_assemble(const Eigen::MatrixXd& v, const std::vector<double>& fvals);
Eigen::MatrixXcd spectral_assemble_c(const Eigen::MatrixXd& v,
                                     const std::vector<std::complex<double>>& fvals);
std::vector<double> map(const std::function<double(double)>& f, const std::vector<double>& xs);
}  // namespace serial

int parallel_threshold();

Eigen::MatrixXd matmul(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::MatrixXd spectral_assemble(const Eigen::MatrixXd& v, const std::vector<double>& fvals);
Eigen::MatrixXcd spectral_assemble_c(const Eigen::MatrixXd& v,
                                     const std::vector<std::complex<double>>& fvals);
std::vector<double> map(const std::function<double(double)>& f, const std::vector<double>& xs);

}  // namespace sdqm::par
