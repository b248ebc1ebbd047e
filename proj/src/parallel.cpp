#include "sdqm/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdqm::par {

namespace serial {

Eigen::MatrixXd matmul(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Eigen::MatrixXd spectral_assemble(const Eigen::MatrixXd& v, const std::vector<double>& fvals) {
  const int n = static_cast<int>(v.rows());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0;
      for (int k = 0; k < n; ++k) acc += v(i, k) * fvals[k] * v(j, k);
      r(i, j) = acc;
    }
  return r;
}

Eigen::MatrixXcd spectral_assemble_c(const Eigen::MatrixXd& v,
                                     const std::vector<std::complex<double>>& fvals) {
  const int n = static_cast<int>(v.rows());
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc = 0;
      for (int k = 0; k < n; ++k) acc += v(i, k) * fvals[k] * v(j, k);
      r(i, j) = acc;
    }
  return r;
}

std::vector<double> map(const std::function<double(double)>& f, const std::vector<double>& xs) {
  std::vector<double> r(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) r[i] = f(xs[i]);
  return r;
}

}  // namespace serial

int parallel_threshold() { return 64; }

Eigen::MatrixXd matmul(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() < parallel_threshold()) return serial::matmul(a, b);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Eigen::MatrixXd spectral_assemble(const Eigen::MatrixXd& v, const std::vector<double>& fvals) {
  const int n = static_cast<int>(v.rows());
  if (n < parallel_threshold()) return serial::spectral_assemble(v, fvals);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0;
      for (int k = 0; k < n; ++k) acc += v(i, k) * fvals[k] * v(j, k);
      r(i, j) = acc;
    }
  return r;
}

Eigen::MatrixXcd spectral_assemble_c(const Eigen::MatrixXd& v,
                                     const std::vector<std::complex<double>>& fvals) {
  const int n = static_cast<int>(v.rows());
  if (n < parallel_threshold()) return serial::spectral_assemble_c(v, fvals);
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc = 0;
      for (int k = 0; k < n; ++k) acc += v(i, k) * fvals[k] * v(j, k);
      r(i, j) = acc;
    }
  return r;
}

std::vector<double> map(const std::function<double(double)>& f, const std::vector<double>& xs) {
  if (static_cast<int>(xs.size()) < parallel_threshold()) return serial::map(f, xs);
  std::vector<double> r(xs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(xs.size()); ++i) r[i] = f(xs[i]);
  return r;
}

}  // namespace sdqm::par
