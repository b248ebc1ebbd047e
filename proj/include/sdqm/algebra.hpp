#pragma once

#include <Eigen/Dense>

#include "sdqm/models.hpp"
#include "sdqm/polyop.hpp"

namespace sdqm {

/// Max residual of [H,[H,eta]] = eta R0(H) + [H,eta] R1(H) + R-1(H)
/// against the given table. rdQM models are checked on the exact
/// rational lattice realization of H~ (eta is a multiplication
/// operator, so the phi_0 similarity preserves every commutator with
/// it); oQM/pdQM models are checked pointwise on random test
/// polynomials in the H~ frame. 0 in exact mode when the table is
/// correct.
double closure_check(const Model& m, const ClosureData& data, int trials,
                     std::uint64_t seed = 1);

/// Float-matrix closure residual on the symmetric lattice H (rdQM).
double closure_check_matrix(const Model& m, const ClosureData& data);

/// Exact fit of R0 (deg <= 2), R1 (deg <= 1), R-1 (deg <= 2) from the
/// closure relation equated on monomial test polynomials; the
/// over-determined remainder is verified rather than least-squared.
/// Throws StructureError("closure relation fails...") on inconsistency.
ClosureData closure_fit(const Model& m);

struct ClosureComparison {
  ClosureData fitted, printed;
  bool matches_printed = false;       // coefficient-by-coefficient
  double residual_fitted = 0;         // closure residual of the fitted table
  double residual_printed = 0;        // closure residual of the printed table
};
ClosureComparison compare_closure_tables(const Model& m, int trials = 8,
                                         std::uint64_t seed = 1);

/// Frequencies a+-(y) = (R1(y) +- sqrt(R1^2 + 4 R0))/2 at a point.
std::pair<Scalar, Scalar> frequencies(const ClosureData& d, const Scalar& y);

struct ClosureSpectrum {
  std::vector<Scalar> energies;    // E(0..n_max), E(0) = 0
  bool backward_consistent = true; // E(n-1) = E(n) + a-(E(n)) held at every step
  double backward_residual = 0;
};
/// Forward recursion E(n+1) = E(n) + a+(E(n)) with the over-determined
/// backward relation checked at every level. Exact when the
/// discriminants are rational perfect squares. Throws DomainError on a
/// negative discriminant.
ClosureSpectrum spectrum_from_closure(const ClosureData& d, int n_max);

/// Max entrywise residual of the closed-form Heisenberg solution for
/// eta against brute-force e^{itH} eta e^{-itH}, over the given times.
/// Uses the fitted closure table. Throws DomainError when a+ = a- or
/// R0 vanishes on the spectrum.
double heisenberg_check(const Model& m, const std::vector<double>& ts);

struct LadderOperators {
  Eigen::MatrixXd a_plus, a_minus;
  Eigen::MatrixXd r_ratio;  // R-1(H) R0(H)^-1
};
/// a+- = +-([H,eta] - (eta + R-1(H) R0(H)^-1) a-+(H)) (a+(H)-a-(H))^-1.
/// Refused (DomainError) when R0 has a root on the spectrum.
LadderOperators build_ladder(const Model& m);

struct LadderReport {
  double annihilate_groundstate = 0;  // ||a- phi_0||
  double sum_rule = 0;                // ||a+ + a- - eta - R-1 R0^-1||_max
  double off_band = 0;                // off-band leakage of a+ in the eigenbasis
  double nilpotency = 0;              // ||(a-)^{N+1}||_max / band growth
  double scale = 1;                   // max |a-| entry, for scale-aware tolerances
};
LadderReport ladder_report(const Model& m);

struct RecurrenceLadderReport {
  double eta_tridiagonal_defect = 0;  // eta in the eigenbasis, beyond the three bands
  double diag_vs_Bn = 0;              // diagonal vs recurrence B_n
  double offdiag_vs_AnCn = 0;         // (n,n+1)(n+1,n) product vs A_n C_{n+1}
  double sum_rule = 0;                // eta = a+ + a- - R-1 R0^-1
};
RecurrenceLadderReport recurrence_vs_ladder(const Model& m);

}  // namespace sdqm
