#pragma once

#include <Eigen/Dense>

#include "sdqm/eig.hpp"
#include "sdqm/models.hpp"

namespace sdqm {

/// A = sqrt(B(x)) - e^d sqrt(D(x)) as an N x (N+1) bidiagonal matrix:
/// row x carries sqrt(B(x)) at column x and -sqrt(D(x+1)) at column
/// x+1. Row N is dropped: B(N) = 0 kills its diagonal entry and the
/// shifted term would leave the lattice, which is what makes the
/// partner exactly one level smaller. Entries are exact where the
/// square roots are rational, float otherwise.
Matrix build_A(const Model& m);

/// H = A^dag A: symmetric tridiagonal (N+1) x (N+1) with
/// H(x,x) = B(x)+D(x), H(x,x+1) = -sqrt(B(x) D(x+1)).
Matrix build_H(const Model& m);

/// The similarity-equivalent rational form of H acting on lattice
/// functions: T(x,x) = B+D, T(x,x+1) = -B(x), T(x,x-1) = -D(x).
/// eta = diag(eta(x)) commutes with the conjugation, so closure-type
/// identities hold for H iff they hold for T; exact-mode checks use T.
Matrix build_T(const Model& m);

/// diag(eta(x)).
Matrix build_eta_diag(const Model& m);

/// phi_0(x)^2 over the lattice (exact on exact input).
std::vector<Scalar> groundstate_weights_exact(const Model& m);

/// Unit-norm positive zero mode of A (and of H).
Eigen::VectorXd groundstate_vector(const Model& m);

struct SpectrumReport {
  std::vector<double> eigenvalues;           // ascending
  Eigen::MatrixXd eigenvectors;
  std::vector<double> formula_values;        // energy(m, n)
  std::vector<double> level_residuals;       // relative eigenvalue error
  double orthogonality_defect = 0;
  double max_eig_residual = 0;
  double max_wavefunction_residual = 0;      // phi_n vs phi_0 P_n(eta)
};
SpectrumReport diagonalize(const Model& m);

struct ShapeInvarianceReport {
  bool exact = false;          // scalar identities verified exactly
  double scalar_residual = 0;  // max residual of the two scalar identities
  double matrix_residual = 0;  // float || A A^T - kappa A^T A(l+d) - E1 ||_max
};

/// A(l)A(l)^dag = kappa A(l+d)^dag A(l+d) + E(1;l), checked both as the
/// float matrix identity and through the two exact scalar identities
///   B(x+1;l) D(x+1;l)   = kappa^2 B(x;l+d) D(x+1;l+d)
///   B(x;l) + D(x+1;l)   = kappa (B(x;l+d) + D(x;l+d)) + E(1;l).
/// Setting e1_offset perturbs E(1) (a deliberately broken check).
ShapeInvarianceReport shape_invariance_check(const Model& m, const Scalar& e1_offset = Scalar(0));

/// pdQM functional shape invariance at random sample coordinates:
///   V(x-ig/2;l) V*(x-ig/2;l)   = kappa^2 V(x;l+d) V*(x-ig;l+d)
///   V(x+ig/2;l) + V*(x-ig/2;l) = kappa (V(x;l+d) + V*(x;l+d)) - E(1;l).
/// Exact (residual 0) when parameters and the half-shift are rational.
ShapeInvarianceReport pdqm_shape_invariance_check(const Model& m, int samples,
                                                  std::uint64_t seed = 1);

struct CrumReport {
  Eigen::MatrixXd H1;          // A A^dag, one level deleted
  std::vector<double> partner_eigenvalues;
  double spectrum_residual = 0;    // vs spectrum(H) \ {0}
  double intertwine_residual = 0;  // H1 (A phi_n) = E(n) (A phi_n), (A^T/E(n)) A phi_n = phi_n
};
CrumReport crum_step(const Model& m);

/// prod_j (m - d_j) >= 0 for every non-negative integer m (checked on
/// m = 0..max(d)+1; the product is eventually positive).
bool deletion_set_admissible(const std::vector<int>& degrees);

struct RodriguesResult {
  Eigen::VectorXd vector;   // normalized A(l^0)^dag ... A(l^{n-1})^dag phi_0(l^n)
  double overlap = 0;       // |<chain, phi_n>|
  bool energy_sum_exact = false;  // E(n;l) = sum_s kappa^s E(1;l^[s])
};
RodriguesResult rodrigues_chain(const Model& m, int n);

}  // namespace sdqm
