#include "sdqm/qes.hpp"

#include <algorithm>

#include "sdqm/eig.hpp"

namespace sdqm {

Poly1 QesSpec::apply_compensated(const Poly1& p) const {
  Poly1 img = pot.op.apply(p);
  if (pot.coeffs.L == 3) return img - p.shift_up() * e0;
  return img - p.shift_up().shift_up() * e0 - p.shift_up() * e1;
}

QesSpec solve_compensation(const PotentialCoefficients& coeffs, const Coordinate& coord, int M) {
  if (coeffs.L != 3 && coeffs.L != 4)
    throw DomainError("compensation supported for L in {3, 4} only");
  if (M < 1) throw RangeError("solve_compensation needs M >= 1");
  QesSpec spec;
  spec.pot = build_unified_potential(coeffs, coord, /*enforce_leading=*/false);
  spec.M = M;
  const Poly1 imgM = spec.pot.op.apply(Poly1::monomial(M, Scalar(1), 'e'));
  if (coeffs.L == 3) {
    spec.e0 = imgM.coeff(M + 1);
    spec.e1 = Scalar(0);
    spec.feasible = true;
    return spec;
  }
  // L = 4
  spec.e0 = imgM.coeff(M + 2);
  spec.e1 = imgM.coeff(M + 1);
  const Poly1 imgM1 = spec.pot.op.apply(Poly1::monomial(M - 1, Scalar(1), 'e'));
  spec.infeasibility_residual = imgM1.coeff(M + 1) - spec.e0;
  spec.feasible = spec.infeasibility_residual.is_exact()
                      ? spec.infeasibility_residual.is_zero()
                      : spec.infeasibility_residual.abs() < 1e-10;
  return spec;
}

Scalar certify_invariance(const QesSpec& spec) {
  Scalar worst(0);
  for (int j = 0; j <= spec.M; ++j) {
    const Poly1 img = spec.apply_compensated(Poly1::monomial(j, Scalar(1), 'e'));
    for (int k = spec.M + 1; k <= img.degree(); ++k) {
      const Scalar c = img.coeff(k);
      if (c.abs() > worst.abs()) worst = c;
    }
  }
  return worst;
}

Matrix qes_restriction_matrix(const QesSpec& spec) {
  Matrix r(spec.M + 1, spec.M + 1, MatrixStructure::Dense);
  for (int j = 0; j <= spec.M; ++j) {
    const Poly1 img = spec.apply_compensated(Poly1::monomial(j, Scalar(1), 'e'));
    for (int i = 0; i <= spec.M; ++i) r.at(i, j) = img.coeff(i);
  }
  return r;
}

QesSpectrum qes_spectrum(const QesSpec& spec, double imag_threshold) {
  QesSpectrum s;
  s.values = eig_general(qes_restriction_matrix(spec).to_real());
  for (const auto& v : s.values) {
    s.max_imag = std::max(s.max_imag, std::abs(v.imag()));
    if (std::abs(v.imag()) > imag_threshold) s.all_real = false;
  }
  return s;
}

}  // namespace sdqm
