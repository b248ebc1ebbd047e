#include "sdqm/algebra.hpp"

#include <array>
#include <cmath>
#include <random>

#include "sdqm/eig.hpp"
#include "sdqm/lattice.hpp"

namespace sdqm {

namespace {

/// LHS/RHS of the closure relation applied to a polynomial f in the
/// H~ frame; legitimate for every shift kind since eta is a
/// multiplication operator.
Poly1 closure_residual_poly(const HtildeOp& op, const ClosureData& d, const Poly1& f) {
  const Poly1 hf = op.apply(f);
  const Poly1 hhf = op.apply(hf);
  // LHS = H^2(eta f) - 2 H(eta H f) + eta H^2 f
  const Poly1 lhs =
      op.apply(op.apply(f.shift_up())) - op.apply(hf.shift_up()) * Scalar(2) + hhf.shift_up();
  auto r_of = [&](const Poly1& r, const Poly1& g0, const Poly1& g1, const Poly1& g2) {
    // r(H) g computed from precomputed g, Hg, H^2 g
    return g0 * r.coeff(0) + g1 * r.coeff(1) + g2 * r.coeff(2);
  };
  // eta R0(H) f
  const Poly1 t0 = r_of(d.R0, f, hf, hhf).shift_up();
  // [H, eta] R1(H) f, with [H,eta] g = H(eta g) - eta H g
  const Poly1 g = r_of(d.R1, f, hf, hhf);
  const Poly1 t1 = op.apply(g.shift_up()) - op.apply(g).shift_up();
  const Poly1 t2 = r_of(d.Rm1, f, hf, hhf);
  return lhs - (t0 + t1 + t2);
}

/// Exact rational lattice realization of the closure residual (rdQM):
/// commutators with the diagonal eta conjugate cleanly under the
/// phi_0 similarity, so H may be replaced by T.
double closure_residual_lattice(const Model& m, const ClosureData& d) {
  const Matrix T = build_T(m);
  const Matrix eta = build_eta_diag(m);
  const Matrix id = Matrix::identity(T.rows());
  auto poly_of = [&](const Poly1& r) {
    Matrix acc = id * r.coeff(0);
    if (r.degree() >= 1) acc = acc + T * r.coeff(1);
    if (r.degree() >= 2) acc = acc + T * T * r.coeff(2);
    return acc;
  };
  const Matrix c1 = T * eta - eta * T;                  // [T, eta]
  const Matrix lhs = T * c1 - c1 * T;                   // [T, [T, eta]]
  const Matrix rhs = eta * poly_of(d.R0) + c1 * poly_of(d.R1) + poly_of(d.Rm1);
  return (lhs - rhs).max_abs();
}

Poly1 random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> deg(1, 6);
  std::vector<Scalar> c(deg(rng) + 1);
  for (auto& v : c) v = Scalar::rational(num(rng), den(rng));
  return Poly1(std::move(c), 'e');
}

}  // namespace

double closure_check(const Model& m, const ClosureData& d, int trials, std::uint64_t seed) {
  if (shift_type_of(m.family()) == ShiftType::RDQM) return closure_residual_lattice(m, d);
  const HtildeOp op = htilde_of(m);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    const Poly1 f = random_poly(rng);
    if (f.is_zero()) continue;
    worst = std::max(worst, closure_residual_poly(op, d, f).max_abs());
  }
  return worst;
}

double closure_check_matrix(const Model& m, const ClosureData& d) {
  const Eigen::MatrixXd H = build_H(m).to_real();
  const Eigen::MatrixXd eta = build_eta_diag(m).to_real();
  auto poly_of = [&](const Poly1& r) {
    Eigen::MatrixXd acc = r.coeff(0).to_double() * Eigen::MatrixXd::Identity(H.rows(), H.cols());
    if (r.degree() >= 1) acc += r.coeff(1).to_double() * H;
    if (r.degree() >= 2) acc += r.coeff(2).to_double() * (H * H);
    return acc;
  };
  const Eigen::MatrixXd c1 = H * eta - eta * H;
  const Eigen::MatrixXd lhs = H * c1 - c1 * H;
  const Eigen::MatrixXd rhs = eta * poly_of(d.R0) + c1 * poly_of(d.R1) + poly_of(d.Rm1);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

ClosureData closure_fit(const Model& m) {
  const HtildeOp op = htilde_of(m);
  // unknowns: R0 = r0 + r1 y + r2 y^2, R1 = r3 + r4 y, R-1 = r5 + r6 y + r7 y^2
  constexpr int kUnknowns = 8;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  const int fmax = 6;
  for (int j = 0; j <= fmax; ++j) {
    const Poly1 f = Poly1::monomial(j, Scalar(1), 'e');
    const Poly1 hf = op.apply(f);
    const Poly1 hhf = op.apply(hf);
    const Poly1 lhs =
        op.apply(op.apply(f.shift_up())) - op.apply(hf.shift_up()) * Scalar(2) + hhf.shift_up();
    // column polynomials multiplying each unknown
    const Poly1 cheta = op.apply(f.shift_up()) - hf.shift_up();  // [H,eta] f
    const Poly1 chetaH = op.apply(hf.shift_up()) - hhf.shift_up();
    const std::array<Poly1, kUnknowns> cols = {
        f.shift_up(),        // r0: eta f
        hf.shift_up(),       // r1: eta H f
        hhf.shift_up(),      // r2: eta H^2 f
        cheta,               // r3: [H,eta] f
        chetaH,              // r4: [H,eta] H f
        f,                   // r5
        hf,                  // r6
        hhf,                 // r7
    };
    int top = lhs.degree();
    for (const auto& c : cols) top = std::max(top, c.degree());
    for (int k = 0; k <= top; ++k) {
      std::vector<Scalar> row(kUnknowns);
      for (int u = 0; u < kUnknowns; ++u) row[u] = cols[u].coeff(k);
      rows.push_back(std::move(row));
      rhs.push_back(lhs.coeff(k));
    }
  }
  Matrix a(static_cast<int>(rows.size()), kUnknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int u = 0; u < kUnknowns; ++u) a.at(static_cast<int>(r), u) = rows[r][u];
  std::vector<Scalar> x;
  try {
    x = solve_exact_overdetermined(a, rhs);
  } catch (const StructureError&) {
    throw StructureError("closure relation fails for this model");
  }
  ClosureData d;
  d.provenance = ClosureData::Provenance::Fitted;
  d.R0 = Poly1({x[0], x[1], x[2]});
  d.R1 = Poly1({x[3], x[4]});
  d.Rm1 = Poly1({x[5], x[6], x[7]});
  return d;
}

ClosureComparison compare_closure_tables(const Model& m, int trials, std::uint64_t seed) {
  ClosureComparison c;
  c.fitted = closure_fit(m);
  c.printed = closure_table(m);
  c.matches_printed =
      c.fitted.R0 == c.printed.R0 && c.fitted.R1 == c.printed.R1 && c.fitted.Rm1 == c.printed.Rm1;
  c.residual_fitted = closure_check(m, c.fitted, trials, seed);
  c.residual_printed = closure_check(m, c.printed, trials, seed);
  return c;
}

std::pair<Scalar, Scalar> frequencies(const ClosureData& d, const Scalar& y) {
  const Scalar r1 = d.R1.eval(y);
  const Scalar disc = r1 * r1 + Scalar(4) * d.R0.eval(y);
  if (disc.is_real() && disc.is_exact() && disc.rat() < 0)
    throw DomainError("negative discriminant R1^2 + 4 R0");
  const Scalar root = disc.sqrt();
  const Scalar half = Scalar::rational(1, 2);
  return {(r1 + root) * half, (r1 - root) * half};
}

ClosureSpectrum spectrum_from_closure(const ClosureData& d, int n_max) {
  ClosureSpectrum s;
  s.energies.push_back(Scalar(0));
  for (int n = 0; n < n_max; ++n) {
    const Scalar en = s.energies.back();
    const auto [ap, am] = frequencies(d, en);
    s.energies.push_back(en + ap);
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto [ap, am] = frequencies(d, s.energies[n]);
    const Scalar back = s.energies[n] + am - s.energies[n - 1];
    if (!back.is_zero()) {
      if (back.is_exact() || back.abs() > 1e-9) s.backward_consistent = false;
      s.backward_residual = std::max(s.backward_residual, back.abs());
    }
  }
  return s;
}

namespace {

struct SpectralTools {
  Eigen::MatrixXd H, eta, V;
  std::vector<double> lam, ap, am, ratio;  // frequencies and R-1/R0 on the spectrum
};

SpectralTools spectral_tools(const Model& m) {
  SpectralTools t;
  t.H = build_H(m).to_real();
  t.eta = build_eta_diag(m).to_real();
  const EigResult e = eig_symmetric(build_H(m));
  t.V = e.vectors;
  t.lam = e.values;
  const ClosureData d = closure_fit(m);
  for (double y : t.lam) {
    const double r1 = d.R1.eval(Scalar::floating(y)).to_double();
    const double r0 = d.R0.eval(Scalar::floating(y)).to_double();
    const double rm1 = d.Rm1.eval(Scalar::floating(y)).to_double();
    const double disc = r1 * r1 + 4 * r0;
    if (disc <= 0) throw DomainError("frequencies degenerate on the spectrum (R1^2+4R0 <= 0)");
    if (r0 == 0) throw DomainError("R0 vanishes on the spectrum; ladder construction refused");
    t.ap.push_back((r1 + std::sqrt(disc)) / 2);
    t.am.push_back((r1 - std::sqrt(disc)) / 2);
    t.ratio.push_back(rm1 / r0);
  }
  return t;
}

Eigen::MatrixXd assemble(const SpectralTools& t, const std::vector<double>& diag) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(t.V.rows(), t.V.cols());
  for (int k = 0; k < t.V.cols(); ++k) d(k, k) = diag[k];
  return t.V * d * t.V.transpose();
}

Eigen::MatrixXcd assemble_c(const SpectralTools& t, const std::vector<std::complex<double>>& diag) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(t.V.rows(), t.V.cols());
  for (int k = 0; k < t.V.cols(); ++k) d(k, k) = diag[k];
  return t.V * d * t.V.transpose();
}

}  // namespace

double heisenberg_check(const Model& m, const std::vector<double>& ts) {
  const SpectralTools t = spectral_tools(m);
  const int n = static_cast<int>(t.lam.size());
  const Eigen::MatrixXd C = t.H * t.eta - t.eta * t.H;
  const Eigen::MatrixXd R = assemble(t, t.ratio);
  double worst = 0;
  for (double time : ts) {
    std::vector<std::complex<double>> ep(n), em(n), f1(n), f2(n), ut(n);
    for (int k = 0; k < n; ++k) {
      const std::complex<double> i(0, 1);
      ep[k] = std::exp(i * t.ap[k] * time);
      em[k] = std::exp(i * t.am[k] * time);
      const double gap = t.ap[k] - t.am[k];
      f1[k] = (ep[k] - em[k]) / gap;
      f2[k] = (-t.am[k] * ep[k] + t.ap[k] * em[k]) / gap;
      ut[k] = std::exp(i * t.lam[k] * time);
    }
    const Eigen::MatrixXcd U = assemble_c(t, ut);
    const Eigen::MatrixXcd lhs = U * t.eta * U.adjoint();
    const Eigen::MatrixXcd rhs =
        C * assemble_c(t, f1) - R + (t.eta + R) * assemble_c(t, f2);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

LadderOperators build_ladder(const Model& m) {
  const SpectralTools t = spectral_tools(m);
  const int n = static_cast<int>(t.lam.size());
  const Eigen::MatrixXd C = t.H * t.eta - t.eta * t.H;
  const Eigen::MatrixXd R = assemble(t, t.ratio);
  std::vector<double> gap_inv(n), apv(n), amv(n);
  for (int k = 0; k < n; ++k) {
    gap_inv[k] = 1.0 / (t.ap[k] - t.am[k]);
    apv[k] = t.ap[k];
    amv[k] = t.am[k];
  }
  const Eigen::MatrixXd Ginv = assemble(t, gap_inv);
  LadderOperators l;
  l.r_ratio = R;
  l.a_plus = (C - (t.eta + R) * assemble(t, amv)) * Ginv;
  l.a_minus = -(C - (t.eta + R) * assemble(t, apv)) * Ginv;
  return l;
}

LadderReport ladder_report(const Model& m) {
  const LadderOperators l = build_ladder(m);
  const SpectralTools t = spectral_tools(m);
  LadderReport r;
  r.scale = std::max(1.0, l.a_minus.cwiseAbs().maxCoeff());
  const Eigen::VectorXd phi0 = groundstate_vector(m);
  r.annihilate_groundstate = (l.a_minus * phi0).cwiseAbs().maxCoeff();
  r.sum_rule = (l.a_plus + l.a_minus - t.eta - l.r_ratio).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd ap_eig = t.V.transpose() * l.a_plus * t.V;
  for (int i = 0; i < ap_eig.rows(); ++i)
    for (int j = 0; j < ap_eig.cols(); ++j)
      if (i != j + 1) r.off_band = std::max(r.off_band, std::abs(ap_eig(i, j)));
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(t.V.rows(), t.V.cols());
  double scale = 1.0;
  for (int k = 0; k < t.V.rows(); ++k) {
    power = power * l.a_minus;
    scale *= std::max(1.0, l.a_minus.cwiseAbs().maxCoeff());
  }
  r.nilpotency = power.cwiseAbs().maxCoeff() / scale;  // relative to the band growth
  return r;
}

RecurrenceLadderReport recurrence_vs_ladder(const Model& m) {
  const int N = m.lattice_N();
  const SpectralTools t = spectral_tools(m);
  const LadderOperators l = build_ladder(m);
  RecurrenceLadderReport r;
  r.sum_rule = (l.a_plus + l.a_minus - t.eta - l.r_ratio).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd eta_eig = t.V.transpose() * t.eta * t.V;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      if (std::abs(i - j) > 1)
        r.eta_tridiagonal_defect = std::max(r.eta_tridiagonal_defect, std::abs(eta_eig(i, j)));
  const int n_max = std::max(1, N - 1);
  const Recurrence rec = three_term_recurrence(m, n_max);
  for (int n = 0; n <= n_max; ++n) {
    r.diag_vs_Bn = std::max(r.diag_vs_Bn, std::abs(eta_eig(n, n) - rec.B[n].to_double()));
    if (n + 1 <= N && n + 1 <= n_max) {
      const double prod = eta_eig(n + 1, n) * eta_eig(n, n + 1);
      const double expect = (rec.A[n] * rec.C[n + 1]).to_double();
      r.offdiag_vs_AnCn = std::max(r.offdiag_vs_AnCn, std::abs(prod - expect));
    }
  }
  return r;
}

}  // namespace sdqm
