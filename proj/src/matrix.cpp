#include "sdqm/matrix.hpp"

#include "sdqm/poly.hpp"

namespace sdqm {

std::vector<Scalar> solve_exact(Matrix a, std::vector<Scalar> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw StructureError("solve_exact needs a square system");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw StructureError("singular system in solve_exact");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      std::swap(b[piv], b[col]);
    }
    const Scalar inv = Scalar(1) / a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      const Scalar f = a.at(r, col) * inv;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<Scalar> x(n, Scalar(0));
  for (int r = n - 1; r >= 0; --r) {
    Scalar acc = b[r];
    for (int j = r + 1; j < n; ++j) acc -= a.at(r, j) * x[j];
    x[r] = acc / a.at(r, r);
  }
  return x;
}

std::vector<Scalar> solve_exact_overdetermined(const Matrix& a, const std::vector<Scalar>& b) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m || m < n)
    throw StructureError("overdetermined solve needs rows >= cols");
  // forward elimination over all rows to find n independent ones
  Matrix w = a;
  std::vector<Scalar> rhs = b;
  std::vector<int> rowperm(m);
  for (int i = 0; i < m; ++i) rowperm[i] = i;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (!w.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(rank, j));
      std::swap(rhs[piv], rhs[rank]);
    }
    const Scalar inv = Scalar(1) / w.at(rank, col);
    for (int r = rank + 1; r < m; ++r) {
      if (w.at(r, col).is_zero()) continue;
      const Scalar f = w.at(r, col) * inv;
      for (int j = col; j < n; ++j) w.at(r, j) -= f * w.at(rank, j);
      rhs[r] -= f * rhs[rank];
    }
    ++rank;
  }
  if (rank < n) throw StructureError("rank-deficient system");
  // residual rows must have vanished for a consistent system
  for (int r = rank; r < m; ++r)
    if (!rhs[r].is_zero()) throw StructureError("inconsistent overdetermined system");
  // back-substitution on the triangularized top block
  std::vector<Scalar> x(n, Scalar(0));
  for (int r = n - 1; r >= 0; --r) {
    Scalar acc = rhs[r];
    for (int j = r + 1; j < n; ++j) acc -= w.at(r, j) * x[j];
    x[r] = acc / w.at(r, r);
  }
  // verify on the original rows (guards pivoting bookkeeping)
  for (int r = 0; r < m; ++r) {
    Scalar acc(0);
    for (int j = 0; j < n; ++j) acc += a.at(r, j) * x[j];
    if (acc != b[r]) throw StructureError("inconsistent overdetermined system");
  }
  return x;
}

}  // namespace sdqm
