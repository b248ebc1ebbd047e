#pragma once

#include <cstdint>
#include <functional>

#include "sdqm/matrix.hpp"
#include "sdqm/models.hpp"

namespace sdqm {

/// The similarity-transformed Hamiltonian as an operator on
/// polynomials in eta. dQM: sample-and-interpolate the defining
/// difference expression
///   eps * ( V+(x) (p(eta(x-i beta)) - p(eta(x)))
///         + V-(x) (p(eta(x+i beta)) - p(eta(x))) )
/// at >= deg+L-1 coordinates with distinct eta values. oQM: the
/// closed-form second-order data -c2 p'' - c1 p' in eta.
struct HtildeOp {
  int L = 2;  // image degree shift is L-2
  int eps = +1;
  bool oqm = false;
  Coordinate coord;
  std::function<Scalar(const Scalar&)> v_plus, v_minus;  // dQM, in the evaluation variable
  Poly1 c2, c1;                                          // oQM, in eta

  Poly1 apply(const Poly1& p) const;
};

/// H~ of a catalog model.
HtildeOp htilde_of(const Model& m);

Poly1 apply_htilde(const Model& m, const Poly1& p);

/// (n+1)x(n+1) matrix of H~ on the monomial basis eta^0..eta^n; upper
/// triangular with diagonal (E(0),...,E(n)) for catalog models.
Matrix htilde_matrix(const Model& m, int n);

/// Monic P_n solving (H~ - E(n)) P_n = 0 by back-substitution on the
/// upper-triangular matrix; exact in exact mode.
Poly1 eigenpolynomial(const Model& m, int n);

/// eta P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1} on monic
/// eigenpolynomials (A_n = 1 by construction); A_{n-1} C_n > 0.
struct Recurrence {
  std::vector<Scalar> A, B, C;  // index n = 0..n_max (C[0] unused)
};
Recurrence three_term_recurrence(const Model& m, int n_max);

/// v_{k,l} constants of the unified potential form, reduced to
/// l in {0,1}: v0[k] = v_{k,0} (k = 0..L), v1[k] = v_{k,1} (k = 0..L-1).
struct PotentialCoefficients {
  int L = 2;
  std::vector<Scalar> v0, v1;

  Scalar v(int k, int l) const {
    if (l == 0 && k >= 0 && k <= L) return v0[k];
    if (l == 1 && k >= 0 && k <= L - 1) return v1[k];
    return Scalar(0);
  }
  bool leading_nonzero() const {
    return !(v0[L].is_zero() && v1[L - 1].is_zero());
  }
};

/// The operator built from v_{k,l}: for dQM shift kinds, the pair
///   V±(x) = Vt±(x) / ((eta(x∓i beta)-eta(x)) (eta(x∓i beta)-eta(x±i beta)))
/// with Vt± = sum v_{k,l} eta(x)^k eta(x∓i beta)^l; for oQM, the
/// beta -> 0 second-order limit data
///   c2 = -(1/2) sum_{k,l} v_{k,l} eta^{k+l},  c1 = -sum_k v_{k,1} eta^k.
struct UnifiedPotential {
  PotentialCoefficients coeffs;
  HtildeOp op;

  /// dQM only: V+ / V- at an evaluation-variable value.
  Scalar eval_plus(const Scalar& v) const { return op.v_plus(v); }
  Scalar eval_minus(const Scalar& v) const { return op.v_minus(v); }
};

/// The shift kind (and hence the eps sign) is implied by the
/// coordinate's family. enforce_leading = false admits coefficient
/// sets whose top-degree row vanishes (the exactly solvable
/// degeneration of a QES set); the public contract keeps the
/// sum_{k+l=L} v^2 != 0 constraint.
UnifiedPotential build_unified_potential(const PotentialCoefficients& coeffs,
                                         const Coordinate& coord, bool enforce_leading = true);

/// Solve for the v_{k,l} (L = 2) reproducing a catalog model's
/// potentials; exact linear solve over sample points, with the
/// over-determined remainder verified. oQM models are matched through
/// their second-order limit data.
PotentialCoefficients recover_vkl(const Model& m);

/// Pointwise dual-closure residual
///   [eta,[eta,H~]] f - (H~ R0d(eta) + [eta,H~] R1d(eta) + Rm1d(eta)) f
/// on random polynomials f of degree <= 6; 0 in exact mode. The R^dual
/// data come from the coordinate's shift closed forms; the oQM case
/// uses their beta -> 0 limits (0, 0, -2 eta'^2).
double dual_closure_check(const Model& m, int trials, std::uint64_t seed = 1);

/// The dual-closure data polynomials of a model (in eta).
struct DualClosureData {
  Poly1 R0d, R1d, Rm1d;
};
DualClosureData dual_closure_data(const Model& m);

}  // namespace sdqm
