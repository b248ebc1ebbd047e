#pragma once

#include <complex>

#include "sdqm/polyop.hpp"

namespace sdqm {

/// A quasi-exactly solvable construction: an L = 3 or L = 4 unified
/// operator plus the compensation terms that make V_M invariant,
///   L = 3:  H~' = H~ - e0(M) eta
///   L = 4:  H~' = H~ - e0(M) eta^2 - e1(M) eta.
struct QesSpec {
  UnifiedPotential pot;
  int M = 1;
  Scalar e0, e1;
  bool feasible = true;          // L = 4 over-determination may fail
  Scalar infeasibility_residual; // the mismatched leading coefficient (L = 4)

  Poly1 apply_compensated(const Poly1& p) const;
};

/// L = 3: e0(M) is the coefficient of eta^{M+1} in H~ eta^M (the
/// lower monomials stay inside V_M automatically). L = 4: solves for
/// (e0, e1) from the degree-(M+2)/(M+1) parts of H~' eta^M; the
/// degree-(M+1) part of H~' eta^{M-1} is then over-determined and a
/// mismatch is returned as an infeasibility report, not an exception.
/// Throws DomainError for L outside {3, 4}.
QesSpec solve_compensation(const PotentialCoefficients& coeffs, const Coordinate& coord, int M);

/// Applies H~' to eta^0..eta^M and returns the largest coefficient of
/// degree > M across the images (exactly 0 for a valid spec in exact
/// mode).
Scalar certify_invariance(const QesSpec& spec);

/// (M+1) x (M+1) restriction of H~' to V_M in the monomial basis.
Matrix qes_restriction_matrix(const QesSpec& spec);

struct QesSpectrum {
  std::vector<std::complex<double>> values;  // sorted by (re, im)
  bool all_real = true;                      // |Im| <= threshold; reported, not assumed
  double max_imag = 0;
};
QesSpectrum qes_spectrum(const QesSpec& spec, double imag_threshold = 1e-9);

}  // namespace sdqm
