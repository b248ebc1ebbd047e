#include "sdqm/eig.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "sdqm/parallel.hpp"

namespace sdqm {

namespace {

void fix_column_signs(Eigen::MatrixXd& v) {
  for (int c = 0; c < v.cols(); ++c) {
    for (int r = 0; r < v.rows(); ++r) {
      if (std::abs(v(r, c)) > 1e-14) {
        if (v(r, c) < 0) v.col(c) *= -1.0;
        break;
      }
    }
  }
}

}  // namespace

EigResult eig_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw StructureError("eig_symmetric needs a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw StructureError("eig_symmetric needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw StructureError("symmetric eigensolver failed");
  EigResult r;
  r.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  r.vectors = es.eigenvectors();
  fix_column_signs(r.vectors);
  for (int k = 0; k < m.rows(); ++k) {
    const double res = (m * r.vectors.col(k) - r.values[k] * r.vectors.col(k)).cwiseAbs().maxCoeff();
    r.max_residual = std::max(r.max_residual, res);
  }
  Eigen::MatrixXd g = r.vectors.transpose() * r.vectors;
  g.diagonal().array() -= 1.0;
  r.orthogonality_defect = g.cwiseAbs().maxCoeff();
  return r;
}

EigResult eig_symmetric(const Matrix& m) {
  if (m.structure() == MatrixStructure::SymTridiagonal && !m.structure_ok())
    throw StructureError("matrix tagged symmetric-tridiagonal is not");
  return eig_symmetric(m.to_real());
}

std::vector<std::complex<double>> eig_general(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw StructureError("general eigensolver failed");
  std::vector<std::complex<double>> ev(es.eigenvalues().data(),
                                       es.eigenvalues().data() + m.rows());
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

Eigen::MatrixXd matrix_function(const Matrix& m, const std::function<double(double)>& f) {
  EigResult e = eig_symmetric(m);
  std::vector<double> fv(e.values.size());
  for (size_t k = 0; k < e.values.size(); ++k) {
    fv[k] = f(e.values[k]);
    if (!std::isfinite(fv[k]))
      throw DomainError("matrix_function: f singular at eigenvalue " +
                        std::to_string(e.values[k]));
  }
  return par::spectral_assemble(e.vectors, fv);
}

Eigen::MatrixXcd matrix_function_c(const Matrix& m,
                                   const std::function<std::complex<double>(double)>& f) {
  EigResult e = eig_symmetric(m);
  std::vector<std::complex<double>> fv(e.values.size());
  for (size_t k = 0; k < e.values.size(); ++k) {
    fv[k] = f(e.values[k]);
    if (!std::isfinite(fv[k].real()) || !std::isfinite(fv[k].imag()))
      throw DomainError("matrix_function: f singular at eigenvalue " +
                        std::to_string(e.values[k]));
  }
  return par::spectral_assemble_c(e.vectors, fv);
}

}  // namespace sdqm
