#include "sdqm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sdqm/polyop.hpp"

namespace sdqm {

namespace {

Scalar B_of(const Model& m, int x) { return potential(m, Which::Plus, Scalar(x)); }
Scalar D_of(const Model& m, int x) { return potential(m, Which::Minus, Scalar(x)); }

}  // namespace

Matrix build_A(const Model& m) {
  const int N = m.lattice_N();
  Matrix a(N, N + 1, MatrixStructure::Bidiagonal);
  for (int x = 0; x < N; ++x) {
    const Scalar b = B_of(m, x), d = D_of(m, x + 1);
    if (b < Scalar(0) || d < Scalar(0))
      throw ValidationError("negative B or D on the lattice");
    a.at(x, x) = b.sqrt();
    a.at(x, x + 1) = -(d.sqrt());
  }
  return a;
}

Matrix build_H(const Model& m) {
  const int N = m.lattice_N();
  Matrix h(N + 1, N + 1, MatrixStructure::SymTridiagonal);
  for (int x = 0; x <= N; ++x) {
    h.at(x, x) = B_of(m, x) + D_of(m, x);
    if (x < N) {
      const Scalar off = -((B_of(m, x) * D_of(m, x + 1)).sqrt());
      h.at(x, x + 1) = off;
      h.at(x + 1, x) = off;
    }
  }
  return h;
}

Matrix build_T(const Model& m) {
  const int N = m.lattice_N();
  Matrix t(N + 1, N + 1, MatrixStructure::Dense);
  for (int x = 0; x <= N; ++x) {
    t.at(x, x) = B_of(m, x) + D_of(m, x);
    if (x < N) t.at(x, x + 1) = -B_of(m, x);
    if (x > 0) t.at(x, x - 1) = -D_of(m, x);
  }
  return t;
}

Matrix build_eta_diag(const Model& m) {
  const int N = m.lattice_N();
  Matrix e(N + 1, N + 1, MatrixStructure::SymTridiagonal);
  for (int x = 0; x <= N; ++x) e.at(x, x) = m.coordinate().eta_lattice(x);
  return e;
}

std::vector<Scalar> groundstate_weights_exact(const Model& m) {
  const int N = m.lattice_N();
  std::vector<Scalar> w(N + 1);
  for (int x = 0; x <= N; ++x) w[x] = groundstate_weight(m, Scalar(x));
  return w;
}

Eigen::VectorXd groundstate_vector(const Model& m) {
  const auto w = groundstate_weights_exact(m);
  Eigen::VectorXd v(w.size());
  for (size_t x = 0; x < w.size(); ++x) v[x] = std::sqrt(w[x].to_double());
  return v / v.norm();
}

SpectrumReport diagonalize(const Model& m) {
  const int N = m.lattice_N();
  const EigResult e = eig_symmetric(build_H(m));
  SpectrumReport r;
  r.eigenvalues = e.values;
  r.eigenvectors = e.vectors;
  r.orthogonality_defect = e.orthogonality_defect;
  r.max_eig_residual = e.max_residual;
  for (int n = 0; n <= N; ++n) {
    const double formula = energy(m, n).to_double();
    r.formula_values.push_back(formula);
    r.level_residuals.push_back(std::abs(e.values[n] - formula) / std::max(1.0, std::abs(formula)));
  }
  // phi_n(x) = phi_0(x) P_n(eta(x)), up to normalization and sign
  const Eigen::VectorXd phi0 = groundstate_vector(m);
  for (int n = 0; n <= N; ++n) {
    const Poly1 pn = eigenpolynomial(m, n);
    Eigen::VectorXd v(N + 1);
    for (int x = 0; x <= N; ++x)
      v[x] = phi0[x] * pn.eval(m.coordinate().eta_lattice(x)).to_double();
    v /= v.norm();
    if (v.dot(e.vectors.col(n)) < 0) v = -v;
    r.max_wavefunction_residual =
        std::max(r.max_wavefunction_residual, (v - e.vectors.col(n)).cwiseAbs().maxCoeff());
  }
  return r;
}

ShapeInvarianceReport shape_invariance_check(const Model& m, const Scalar& e1_offset) {
  const int N = m.lattice_N();
  if (N < 1) throw RangeError("shape invariance needs N >= 1");
  const Model ms = m.shifted();
  const Scalar kappa = m.kappa();
  const Scalar e1 = energy(m, 1) + e1_offset;
  ShapeInvarianceReport rep;

  bool exact_inputs = true;
  Scalar worst(0);
  auto track = [&](const Scalar& r) {
    exact_inputs = exact_inputs && r.is_exact();
    if (r.abs() > worst.abs()) worst = r;
  };
  // off-diagonal squares: x = 0..N-2
  for (int x = 0; x + 1 <= N - 1; ++x) {
    const Scalar lhs = B_of(m, x + 1) * D_of(m, x + 1);
    const Scalar rhs = kappa * kappa * potential(ms, Which::Plus, Scalar(x)) *
                       potential(ms, Which::Minus, Scalar(x + 1));
    track(lhs - rhs);
  }
  // diagonal: x = 0..N-1
  for (int x = 0; x <= N - 1; ++x) {
    const Scalar lhs = B_of(m, x) + D_of(m, x + 1);
    const Scalar rhs =
        kappa * (potential(ms, Which::Plus, Scalar(x)) + potential(ms, Which::Minus, Scalar(x))) +
        e1;
    track(lhs - rhs);
  }
  rep.exact = exact_inputs && worst.is_zero();
  rep.scalar_residual = worst.abs();

  const Eigen::MatrixXd A = build_A(m).to_real();
  const Eigen::MatrixXd A1 = build_A(ms).to_real();
  const Eigen::MatrixXd lhs = A * A.transpose();
  const Eigen::MatrixXd rhs = kappa.to_double() * (A1.transpose() * A1) +
                              e1.to_double() * Eigen::MatrixXd::Identity(N, N);
  rep.matrix_residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return rep;
}

ShapeInvarianceReport pdqm_shape_invariance_check(const Model& m, int samples,
                                                  std::uint64_t seed) {
  if (shift_type_of(m.family()) != ShiftType::PDQM)
    throw DomainError("pdQM shape invariance needs a pdQM model");
  const Model ms = m.shifted();
  const Scalar kappa = m.kappa();
  const Scalar e1 = energy(m, 1);
  const bool aw = m.family() == Family::AskeyWilson;
  // half-shift in the evaluation variable: x -> x -+ i gamma/2 is
  // x -+ i/2 for gamma = 1, and z -> z q^(+-1/2) in the z-representation
  const Scalar half_i = Scalar::gaussian(mpq_class(0), mpq_class(1, 2));
  Scalar sq;  // sqrt(q) for Askey-Wilson
  if (aw) sq = m.param("q").sqrt();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 40);
  ShapeInvarianceReport rep;
  bool exact_inputs = true;
  Scalar worst(0);
  auto track = [&](const Scalar& r) {
    exact_inputs = exact_inputs && r.is_exact();
    if (r.abs() > worst.abs()) worst = r;
  };
  int done = 0;
  for (int it = 0; done < samples && it < samples * 20; ++it) {
    const Scalar x = aw ? Scalar(2 + num(rng)) : Scalar::rational(num(rng), 7);
    try {
      Scalar x_mh, x_ph, x_mg;  // x - ig/2, x + ig/2, x - ig
      if (aw) {
        x_mh = x * sq;
        x_ph = x / sq;
        x_mg = x * m.param("q");
      } else {
        x_mh = x - half_i;
        x_ph = x + half_i;
        x_mg = x - Scalar::gaussian(0, 1);
      }
      const Scalar lhs1 = potential(m, Which::Plus, x_mh) * potential(m, Which::Minus, x_mh);
      const Scalar rhs1 = kappa * kappa * potential(ms, Which::Plus, x) *
                          potential(ms, Which::Minus, x_mg);
      track(lhs1 - rhs1);
      const Scalar lhs2 = potential(m, Which::Plus, x_ph) + potential(m, Which::Minus, x_mh);
      const Scalar rhs2 =
          kappa * (potential(ms, Which::Plus, x) + potential(ms, Which::Minus, x)) - e1;
      track(lhs2 - rhs2);
      ++done;
    } catch (const DomainError&) {
      continue;  // pole sample: resample
    }
  }
  rep.exact = exact_inputs && worst.is_zero();
  rep.scalar_residual = worst.abs();
  rep.matrix_residual = rep.scalar_residual;
  return rep;
}

CrumReport crum_step(const Model& m) {
  const int N = m.lattice_N();
  if (N < 1) throw RangeError("crum_step: nothing to delete at N = 0");
  const Eigen::MatrixXd A = build_A(m).to_real();
  CrumReport r;
  r.H1 = A * A.transpose();
  const EigResult full = eig_symmetric(build_H(m));
  const EigResult part = eig_symmetric(r.H1);
  r.partner_eigenvalues = part.values;
  for (int n = 1; n <= N; ++n) {
    const double scale = std::max(1.0, std::abs(full.values[n]));
    r.spectrum_residual =
        std::max(r.spectrum_residual, std::abs(part.values[n - 1] - full.values[n]) / scale);
    // mapped eigenvectors
    const Eigen::VectorXd psi = A * full.vectors.col(n);
    r.intertwine_residual = std::max(
        r.intertwine_residual,
        (r.H1 * psi - full.values[n] * psi).cwiseAbs().maxCoeff() / scale);
    const Eigen::VectorXd back = (A.transpose() * psi) / full.values[n];
    r.intertwine_residual = std::max(
        r.intertwine_residual, (back - full.vectors.col(n)).cwiseAbs().maxCoeff());
  }
  return r;
}

bool deletion_set_admissible(const std::vector<int>& degrees) {
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) throw DomainError("deletion degrees must be non-negative");
    for (size_t j = i + 1; j < degrees.size(); ++j)
      if (degrees[i] == degrees[j]) throw DomainError("duplicate deletion degrees");
  }
  if (degrees.empty()) return true;
  const int top = *std::max_element(degrees.begin(), degrees.end());
  for (int mm = 0; mm <= top + 1; ++mm) {
    long prod = 1;
    for (int d : degrees) prod *= (mm - d);
    if (prod < 0) return false;
  }
  return true;
}

RodriguesResult rodrigues_chain(const Model& m, int n) {
  const int N = m.lattice_N();
  if (n < 0 || n > N) throw RangeError("rodrigues_chain needs 0 <= n <= N");
  // lambda^[s] = lambda + s delta, s = 0..n
  std::vector<Model> lam = {m};
  for (int s = 1; s <= n; ++s) {
    try {
      lam.push_back(lam.back().shifted());
    } catch (const ValidationError& e) {
      throw RangeError("intermediate parameter set lambda^[" + std::to_string(s) +
                       "] inadmissible: " + e.what());
    }
  }
  Eigen::VectorXd v = groundstate_vector(lam[n]);
  for (int s = n - 1; s >= 0; --s) v = build_A(lam[s]).to_real().transpose() * v;
  RodriguesResult r;
  r.vector = v / v.norm();
  const EigResult full = eig_symmetric(build_H(m));
  r.overlap = std::abs(r.vector.dot(full.vectors.col(n)));
  // E(n;l) = sum_{s<n} kappa^s E(1;l^[s])
  Scalar sum(0), kap(1);
  for (int s = 0; s < n; ++s) {
    sum += kap * energy(lam[s], 1);
    kap *= m.kappa();
  }
  const Scalar diff = sum - energy(m, n);
  r.energy_sum_exact = diff.is_exact() && diff.is_zero();
  return r;
}

}  // namespace sdqm
