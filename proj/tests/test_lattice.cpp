#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalog_fixtures.hpp"
#include "sdqm/lattice.hpp"
#include "sdqm/polyop.hpp"

using namespace sdqm;
using fixtures::rat;

namespace {

std::vector<Model> rdqm_fixtures() {
  return {fixtures::hahn(), fixtures::racah(), fixtures::qracah()};
}

}  // namespace

TEST_CASE("build_A hand values and zero mode") {
  const Model h11 = fixtures::hahn(1, 1, 1, 1, 1);
  const Matrix a = build_A(h11);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 2);
  CHECK(a.at(0, 0) == Scalar(1));
  CHECK(a.at(0, 1) == Scalar(-1));
  for (const Model& m : rdqm_fixtures()) {
    CAPTURE(family_name(m.family()));
    const Eigen::MatrixXd A = build_A(m).to_real();
    const Eigen::VectorXd phi0 = groundstate_vector(m);
    CHECK((A * phi0).cwiseAbs().maxCoeff() <= 1e-12);     // A phi_0 = 0
    const Eigen::MatrixXd H = build_H(m).to_real();
    CHECK((A.transpose() * A - H).cwiseAbs().maxCoeff() <= 1e-12 * H.cwiseAbs().maxCoeff());
    CHECK((H * phi0).cwiseAbs().maxCoeff() <= 1e-11);
    for (int x = 0; x < phi0.size(); ++x) CHECK(phi0[x] > 0);  // no node
  }
}

TEST_CASE("build_H hand values") {
  const Matrix h = build_H(fixtures::hahn(1, 1, 1, 1, 1));
  CHECK(h.structure() == MatrixStructure::SymTridiagonal);
  CHECK(h.at(0, 0) == Scalar(1));
  CHECK(h.at(0, 1) == Scalar(-1));
  CHECK(h.at(1, 0) == Scalar(-1));
  CHECK(h.at(1, 1) == Scalar(1));
  CHECK(h.structure_ok());
}

TEST_CASE("groundstate examples") {
  const Eigen::VectorXd g2 = groundstate_vector(fixtures::hahn(1, 1, 1, 1, 2));
  for (int x = 0; x <= 2; ++x) CHECK(g2[x] == doctest::Approx(1.0 / std::sqrt(3.0)));
  const Eigen::VectorXd g1 = groundstate_vector(fixtures::hahn(1, 1, 1, 1, 1));
  for (int x = 0; x <= 1; ++x) CHECK(g1[x] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("diagonalize matches the energy formulas") {
  const SpectrumReport r11 = diagonalize(fixtures::hahn(1, 1, 1, 1, 1));
  CHECK(r11.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r11.eigenvalues[1] == doctest::Approx(2.0));
  for (const Model& m : rdqm_fixtures()) {
    CAPTURE(family_name(m.family()));
    const SpectrumReport r = diagonalize(m);
    CHECK(std::abs(r.eigenvalues[0]) <= 1e-10);
    for (double res : r.level_residuals) CHECK(res <= 1e-10);
    CHECK(r.orthogonality_defect <= 1e-12);
    CHECK(r.max_wavefunction_residual <= 1e-9);
  }
}

TEST_CASE("shape invariance holds exactly") {
  for (const Model& m : rdqm_fixtures()) {
    CAPTURE(family_name(m.family()));
    const auto rep = shape_invariance_check(m);
    CHECK(rep.exact);
    CHECK(rep.scalar_residual == 0.0);
    CHECK(rep.matrix_residual <= 1e-10);
  }
  // perturbed identity must fail
  const auto bad = shape_invariance_check(fixtures::racah(), Scalar(1));
  CHECK_FALSE(bad.exact);
  CHECK(bad.scalar_residual >= 0.5);
  // kappa values
  CHECK(fixtures::hahn().kappa() == Scalar(1));
  CHECK(fixtures::qracah().kappa() == Scalar(2));
}

TEST_CASE("pdQM functional shape invariance") {
  for (const Model& m : {fixtures::cont_hahn(), fixtures::wilson(), fixtures::askey_wilson()}) {
    CAPTURE(family_name(m.family()));
    const auto rep = pdqm_shape_invariance_check(m, 20);
    CHECK(rep.exact);  // q = 1/4 keeps sqrt(q) rational for Askey-Wilson
    CHECK(rep.scalar_residual == 0.0);
  }
  CHECK_THROWS_AS(pdqm_shape_invariance_check(fixtures::hahn(), 5), DomainError);
}

TEST_CASE("crum step") {
  const CrumReport c11 = crum_step(fixtures::hahn(1, 1, 1, 1, 1));
  CHECK(c11.H1.rows() == 1);
  CHECK(c11.H1(0, 0) == doctest::Approx(2.0));
  for (const Model& m : rdqm_fixtures()) {
    CAPTURE(family_name(m.family()));
    const CrumReport c = crum_step(m);
    CHECK(c.spectrum_residual <= 1e-10);
    CHECK(c.intertwine_residual <= 1e-10);
  }
  CHECK_THROWS_AS(crum_step(fixtures::hahn(1, 1, 1, 1, 0)), RangeError);
}

TEST_CASE("crum chain empties the spectrum one level at a time") {
  // repeated A A^T on the float matrices, checked against E(s..N)
  const Model m = fixtures::hahn(2, 1, 3, 1, 6);
  Eigen::MatrixXd h = build_H(m).to_real();
  const int N = m.lattice_N();
  for (int s = 1; s <= N; ++s) {
    // factor h - E(s-1) = A^T A by eigendecomposition, then flip
    const EigResult e = eig_symmetric(h);
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(h.rows(), h.cols());
    for (int k = 1; k < h.rows(); ++k)
      sq += (e.values[k] - e.values[0]) * e.vectors.col(k) * e.vectors.col(k).transpose();
    // partner spectrum = spectrum minus its lowest level
    Eigen::MatrixXd partner = sq;  // same spectrum as A A^T + shift, kept implicit
    std::vector<double> expect;
    for (int n = s; n <= N; ++n) expect.push_back(energy(m, n).to_double());
    const EigResult pe = eig_symmetric(partner);
    for (size_t k = 0; k < expect.size(); ++k)
      CHECK(pe.values[k + 1] + energy(m, s - 1).to_double() ==
            doctest::Approx(expect[k]).epsilon(1e-9));
    // descend: drop the lowest level explicitly
    Eigen::MatrixXd next(h.rows() - 1, h.cols() - 1);
    Eigen::MatrixXd v = e.vectors.rightCols(h.rows() - 1);
    next = (v.transpose() * h * v);
    h = next;
  }
  CHECK(h.rows() == 1);
  CHECK(h(0, 0) == doctest::Approx(energy(m, N).to_double()));
}

TEST_CASE("deletion set admissibility") {
  CHECK(deletion_set_admissible({1, 2}));
  CHECK_FALSE(deletion_set_admissible({1}));
  CHECK(deletion_set_admissible({}));
  CHECK(deletion_set_admissible({0}));
  CHECK(deletion_set_admissible({0, 1, 2}));
  CHECK_FALSE(deletion_set_admissible({2}));
  CHECK_FALSE(deletion_set_admissible({1, 2, 3}));
  CHECK(deletion_set_admissible({3, 4}));
  CHECK_THROWS_AS(deletion_set_admissible({1, 1}), DomainError);
}

TEST_CASE("rodrigues chain") {
  const Model h11 = fixtures::hahn(1, 1, 1, 1, 1);
  const RodriguesResult r0 = rodrigues_chain(h11, 0);
  CHECK(r0.overlap >= 1 - 1e-12);
  const RodriguesResult r1 = rodrigues_chain(h11, 1);
  // A(l)^dag phi_0(l+d) is proportional to (1, -1)
  CHECK(std::abs(r1.vector[0] - 1 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(r1.vector[1] + 1 / std::sqrt(2.0)) <= 1e-12);
  CHECK(r1.energy_sum_exact);
  for (const Model& m : {fixtures::hahn(), fixtures::qracah(4), fixtures::racah(6)}) {
    CAPTURE(family_name(m.family()));
    for (int n = 0; n <= m.lattice_N(); ++n) {
      const RodriguesResult r = rodrigues_chain(m, n);
      CHECK(r.overlap >= 1 - 1e-10);
      CHECK(r.energy_sum_exact);
    }
  }
}

TEST_CASE("isospectrality of A^dag A and A A^dag under random parameters") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> u(1, 9);
  for (int t = 0; t < 25; ++t) {
    const int N = 2 + static_cast<int>(u(rng) % 8);
    const Model m = fixtures::hahn(u(rng), u(rng), u(rng), u(rng), N);
    const CrumReport c = crum_step(m);
    CHECK(c.spectrum_residual <= 1e-10);
  }
}

TEST_CASE("weight orthogonality is exact") {
  for (const Model& m : rdqm_fixtures()) {
    CAPTURE(family_name(m.family()));
    const int N = m.lattice_N();
    const auto w = groundstate_weights_exact(m);
    std::vector<Poly1> P;
    for (int n = 0; n <= std::min(N, 5); ++n) P.push_back(eigenpolynomial(m, n));
    for (size_t n = 0; n < P.size(); ++n)
      for (size_t k = 0; k < n; ++k) {
        Scalar acc(0);
        for (int x = 0; x <= N; ++x) {
          const Scalar ex = m.coordinate().eta_lattice(x);
          acc += w[x] * P[n].eval(ex) * P[k].eval(ex);
        }
        CHECK(acc.is_zero());
      }
  }
}
