#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sdqm/scalar.hpp"

namespace sdqm {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MatrixStructure { Dense, SymTridiagonal, UpperTriangular, Bidiagonal };

/// Dense storage of a rows x cols scalar grid with a structure tag.
/// The tag is a claim about the sparsity pattern; structure_ok()
/// checks the claim entry by entry.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, MatrixStructure tag = MatrixStructure::Dense)
      : rows_(rows), cols_(cols), tag_(tag), e_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n, MatrixStructure::SymTridiagonal);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MatrixStructure structure() const { return tag_; }
  void set_structure(MatrixStructure t) { tag_ = t; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool structure_ok() const {
    auto band_zero = [&](int i, int j) { return at(i, j).is_zero(); };
    switch (tag_) {
      case MatrixStructure::Dense:
        return true;
      case MatrixStructure::SymTridiagonal:
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
          for (int j = 0; j < cols_; ++j) {
            if (std::abs(i - j) > 1 && !band_zero(i, j)) return false;
            if (at(i, j) != at(j, i) || !at(i, j).is_real()) return false;
          }
        return true;
      case MatrixStructure::UpperTriangular:
        for (int i = 0; i < rows_; ++i)
          for (int j = 0; j < std::min(i, cols_); ++j)
            if (!band_zero(i, j)) return false;
        return true;
      case MatrixStructure::Bidiagonal:
        for (int i = 0; i < rows_; ++i)
          for (int j = 0; j < cols_; ++j)
            if (j != i && j != i + 1 && !band_zero(i, j)) return false;
        return true;
    }
    return false;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, tag_ == MatrixStructure::SymTridiagonal ? tag_ : MatrixStructure::Dense);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructureError("matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructureError("matrix sum size mismatch");
    Matrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (b * Scalar(-1)); }
  friend Matrix operator*(const Matrix& a, const Scalar& s) {
    Matrix c = a;
    for (auto& v : c.e_) v *= s;
    return c;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r(rows_, Scalar(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : e_) m = std::max(m, v.abs());
    return m;
  }

  Eigen::MatrixXd to_real() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).to_double();
    return m;
  }
  static Matrix from_real(const Eigen::MatrixXd& m, MatrixStructure tag = MatrixStructure::Dense) {
    Matrix r(static_cast<int>(m.rows()), static_cast<int>(m.cols()), tag);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Scalar::floating(m(i, j));
    return r;
  }

 private:
  int rows_, cols_;
  MatrixStructure tag_ = MatrixStructure::Dense;
  std::vector<Scalar> e_;
};

/// Exact linear solve (Gaussian elimination, first-nonzero pivot).
/// a is n x n of exact scalars; throws StructureError when singular.
std::vector<Scalar> solve_exact(Matrix a, std::vector<Scalar> b);

/// Least-structure exact solve of an overdetermined consistent system:
/// picks n independent rows, solves, and verifies the rest exactly.
/// Throws StructureError when the system is inconsistent or rank-deficient.
std::vector<Scalar> solve_exact_overdetermined(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace sdqm
