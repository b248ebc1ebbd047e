#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "sdqm/matrix.hpp"

namespace sdqm {

struct EigResult {
  std::vector<double> values;   // ascending
  Eigen::MatrixXd vectors;      // orthonormal columns, values[k] <-> column k
  double max_residual = 0;      // max_k ||M v_k - lambda_k v_k||_inf
  double orthogonality_defect = 0;  // ||V^T V - I||_max
};

/// Spectral decomposition of a real symmetric matrix (dense or
/// tridiagonal). Eigenvalues ascending, eigenvector columns
/// orthonormal, each column sign-fixed to a positive first nonzero
/// component. Throws StructureError on non-symmetric input.
EigResult eig_symmetric(const Matrix& m);
EigResult eig_symmetric(const Eigen::MatrixXd& m);

/// Eigenvalues of a general real square matrix (possibly complex).
std::vector<std::complex<double>> eig_general(const Eigen::MatrixXd& m);

/// f(M) = V f(Lambda) V^T through the spectral decomposition.
/// Throws DomainError naming the eigenvalue when f is singular there.
Eigen::MatrixXd matrix_function(const Matrix& m, const std::function<double(double)>& f);
Eigen::MatrixXcd matrix_function_c(const Matrix& m,
                                   const std::function<std::complex<double>(double)>& f);

}  // namespace sdqm
