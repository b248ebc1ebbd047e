// Acceptance suite: runs every catalog-wide identity check at its
// stated tolerance and prints one line per criterion. Printed-table
// discrepancies are reported as flagged warnings with both tables
// side by side (never silently corrected); any hard failure makes the
// binary exit nonzero.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "catalog_fixtures.hpp"
#include "sdqm/algebra.hpp"
#include "sdqm/lattice.hpp"
#include "sdqm/qes.hpp"
#include "sdqm/special.hpp"
#include "sdqm/verify.hpp"

using namespace sdqm;

namespace {

int g_failures = 0;

void line(int k, const char* what, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", k, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

void flagged(int k, const char* what, const std::string& detail) {
  std::printf("[FLAG] criterion %2d: %s -- %s\n", k, what, detail.c_str());
}

// fixtures at the sizes the criteria name
Model hahn20() { return fixtures::hahn(3, 2, 5, 2, 20); }
Model racah10() { return fixtures::racah(10); }
Model qracah10() { return fixtures::qracah(10); }

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// ------------------------------------------------------------------ 1
void criterion_spectra() {
  double worst = 0;
  for (const Model& m : {hahn20(), racah10(), qracah10()}) {
    const SpectrumReport r = diagonalize(m);
    for (double res : r.level_residuals) worst = std::max(worst, res);
  }
  line(1, "lattice spectra match the factorization-consistent energies (rel 1e-10)",
       worst <= 1e-10, "max residual " + fmt_double(worst));
  // the printed-energy discrepancy must surface as a flagged warning with its citation
  bool flag_ok = true;
  for (const Model& m :
       {hahn20(), racah10(), fixtures::cont_hahn(), fixtures::wilson()}) {
    const RunReport rep = run_suite(m, "spectrum", {});
    bool found = false;
    for (const auto& d : rep.discrepancies)
      found = found || (d.where == energy_flag_citation() &&
                        d.what.find("energy") != std::string::npos);
    bool has_flag = false;
    for (const auto& c : rep.checks) has_flag = has_flag || c.status == "flagged";
    flag_ok = flag_ok && found && has_flag;
    if (found)
      flagged(1, family_name(m.family()),
              "printed energy normalization differs, cited at " +
                  std::string(energy_flag_citation()));
  }
  line(1, "factor-4 (and q-power) energy misprints flagged with citation", flag_ok);
}

// ------------------------------------------------------------------ 2
void criterion_triangular() {
  bool ok = true;
  std::string bad;
  for (const Model& m : fixtures::all_nine()) {
    const Matrix t = htilde_matrix(m, 8);
    bool upper = t.structure() == MatrixStructure::UpperTriangular;
    for (int i = 0; i <= 8 && upper; ++i) {
      for (int j = 0; j < i; ++j) upper = upper && t.at(i, j).is_zero();
      upper = upper && t.at(i, i) == energy(m, i) && t.at(i, i).is_exact();
    }
    if (!upper) {
      ok = false;
      bad += std::string(family_name(m.family())) + " ";
    }
  }
  line(2, "H~ matrix (n = 8) exactly upper triangular with diagonal E(0..8), all nine", ok, bad);
}

// ------------------------------------------------------------------ 3
void criterion_shape() {
  bool ok = true;
  std::string detail;
  for (const Model& m :
       {fixtures::hahn(3, 2, 5, 2, 8), fixtures::racah(8), fixtures::qracah(8)}) {
    const auto rep = shape_invariance_check(m);
    ok = ok && rep.exact && rep.scalar_residual == 0.0;
    if (!rep.exact) detail += std::string(family_name(m.family())) + " not exact; ";
  }
  for (const Model& m : {fixtures::cont_hahn(), fixtures::wilson(), fixtures::askey_wilson()}) {
    const auto rep = pdqm_shape_invariance_check(m, 20);
    ok = ok && rep.exact && rep.scalar_residual == 0.0;
    if (!rep.exact) detail += std::string(family_name(m.family())) + " not exact; ";
  }
  line(3, "shape invariance exact: rdQM matrix identity (N <= 8) and pdQM functional identities",
       ok, detail);
}

// ------------------------------------------------------------------ 4
void criterion_closure_tables() {
  const std::vector<Model> exact_match = {
      fixtures::hermite(), fixtures::laguerre(),     fixtures::cont_hahn(), fixtures::wilson(),
      fixtures::askey_wilson(), fixtures::hahn(),    fixtures::racah()};
  bool ok = true;
  std::string bad;
  for (const Model& m : exact_match) {
    const ClosureComparison c = compare_closure_tables(m);
    const bool good = c.matches_printed && c.residual_fitted == 0.0;
    ok = ok && good;
    if (!good) bad += std::string(family_name(m.family())) + " ";
  }
  line(4, "closure_fit reproduces the printed tables coefficient-by-coefficient "
          "(hermite laguerre cont_hahn wilson askey_wilson hahn racah)",
       ok, bad);

  // q-Racah: fitted table satisfies the relation exactly; the printed
  // R-1 constant term does not match it (reported, not corrected)
  const ClosureComparison cq = compare_closure_tables(fixtures::qracah());
  line(4, "q_racah fitted table satisfies the closure relation exactly",
       cq.residual_fitted == 0.0 && cq.fitted.R0 == cq.printed.R0 && cq.fitted.R1 == cq.printed.R1);
  if (!cq.matches_printed) {
    flagged(4, "q_racah printed vs fitted",
            "printed R-1 constant term differs; printed: R-1 = " + cq.printed.Rm1.str() +
                " | fitted: R-1 = " + cq.fitted.Rm1.str());
  }

  const ClosureComparison cj = compare_closure_tables(fixtures::jacobi());
  line(4, "jacobi fitted table satisfies the closure relation with residual 0",
       cj.residual_fitted == 0.0);
  flagged(4, "jacobi printed vs fitted",
          "printed: " + std::string("R0 = ") + cj.printed.R0.str() + ", R1 = " +
              cj.printed.R1.str() + ", R-1 = " + cj.printed.Rm1.str() +
              " | fitted: R0 = " + cj.fitted.R0.str() + ", R1 = " + cj.fitted.R1.str() +
              ", R-1 = " + cj.fitted.Rm1.str() +
              (closure_check(fixtures::jacobi(), cj.printed, 6) == 0.0
                   ? " | printed row satisfies the relation"
                   : " | printed row does NOT satisfy the relation"));
}

// ------------------------------------------------------------------ 5
void criterion_closure_spectrum() {
  bool ok = true;
  std::string bad;
  for (const Model& m : {hahn20(), racah10(), qracah10()}) {
    const int nmax = std::min(10, m.lattice_N());
    const ClosureSpectrum s = spectrum_from_closure(closure_fit(m), nmax);
    bool good = s.backward_consistent;
    for (int n = 0; n <= nmax; ++n) good = good && s.energies[n] == energy(m, n);
    ok = ok && good;
    if (!good) bad += std::string(family_name(m.family())) + " ";
  }
  line(5, "closure recursion E(n+1) = E(n) + a+(E(n)) reproduces the spectra exactly "
          "(n <= 10, backward-consistent)",
       ok, bad);
}

// ------------------------------------------------------------------ 6
void criterion_heisenberg() {
  const double rh = heisenberg_check(fixtures::hahn(3, 2, 5, 2, 8), {0.1, 1.0, 3.0});
  const double rr = heisenberg_check(fixtures::racah(8), {0.1, 1.0, 3.0});
  const double worst = std::max(rh, rr);
  line(6, "Heisenberg closed form vs brute-force U(t) eta U(t)^dag (N = 8, t in {0.1,1,3})",
       worst <= 1e-8, "max residual " + fmt_double(worst));
}

// ------------------------------------------------------------------ 7
void criterion_ladder() {
  bool ok = true;
  double w0 = 0, w1 = 0, w2 = 0;
  for (const Model& m :
       {fixtures::hahn(3, 2, 5, 2, 8), fixtures::racah(8), fixtures::qracah(8)}) {
    const LadderReport r = ladder_report(m);
    w0 = std::max(w0, r.annihilate_groundstate);
    w1 = std::max(w1, r.off_band);
    w2 = std::max(w2, r.sum_rule);
  }
  ok = w0 <= 1e-12 && w1 <= 1e-10 && w2 <= 1e-10;
  line(7, "ladder action: a- phi_0 = 0 (1e-12), off-band leakage (1e-10), t = 0 sum rule (1e-10)",
       ok, "residuals " + fmt_double(w0) + " / " + fmt_double(w1) + " / " + fmt_double(w2));
}

// ------------------------------------------------------------------ 8
void criterion_crum() {
  bool ok = true;
  double worst = 0;
  for (const Model& m :
       {fixtures::hahn(3, 2, 5, 2, 10), fixtures::racah(10), fixtures::qracah(10)}) {
    const CrumReport c = crum_step(m);
    worst = std::max({worst, c.spectrum_residual, c.intertwine_residual});
    ok = ok && c.spectrum_residual <= 1e-10 && c.intertwine_residual <= 1e-10;
  }
  line(8, "Crum step: spectrum(A A^dag) = spectrum(A^dag A) \\ {0} and intertwining (1e-10, N <= 10)",
       ok, "max residual " + fmt_double(worst));
}

// ------------------------------------------------------------------ 9
void criterion_rodrigues() {
  bool ok = true;
  double worst = 0;
  for (const Model& m : {fixtures::hahn(3, 2, 5, 2, 8), fixtures::qracah(8)}) {
    for (int n = 0; n <= m.lattice_N(); ++n) {
      const RodriguesResult r = rodrigues_chain(m, n);
      worst = std::max(worst, 1.0 - r.overlap);
      ok = ok && r.overlap >= 1.0 - 1e-10 && r.energy_sum_exact;
    }
  }
  line(9, "Rodrigues chain overlap >= 1 - 1e-10 and exact energy sums (hahn, q_racah, N = 8)",
       ok, "max 1-overlap " + fmt_double(worst));
}

// ------------------------------------------------------------------ 10
void criterion_orthogonality() {
  bool exact_ok = true;
  for (const Model& m :
       {fixtures::hahn(3, 2, 5, 2, 10), fixtures::racah(10), fixtures::qracah(10)}) {
    const int N = m.lattice_N();
    const auto w = groundstate_weights_exact(m);
    std::vector<Poly1> P;
    for (int n = 0; n <= N; ++n) P.push_back(eigenpolynomial(m, n));
    for (int n = 0; n <= N && exact_ok; ++n)
      for (int k = 0; k < n && exact_ok; ++k) {
        Scalar acc(0);
        for (int x = 0; x <= N; ++x) {
          const Scalar ex = m.coordinate().eta_lattice(x);
          acc += w[x] * P[n].eval(ex) * P[k].eval(ex);
        }
        exact_ok = acc.is_zero();
      }
  }
  line(10, "rdQM weighted orthogonality sums vanish exactly (n != m <= N = 10)", exact_ok);

  // pdQM quadrature orthogonality to 1e-6 for n, m <= 5
  double worst = 0;
  for (const Model& m : {fixtures::cont_hahn(), fixtures::wilson(), fixtures::askey_wilson()}) {
    std::vector<Poly1> P;
    for (int n = 0; n <= 5; ++n) P.push_back(eigenpolynomial(m, n));
    double lo = 0, hi = 0;
    int panels = 0;
    std::function<double(double)> weight;
    std::function<double(double)> etad;
    switch (m.family()) {
      case Family::ContHahn:
        lo = -14;
        hi = 14;
        panels = 6000;
        etad = [](double x) { return x; };
        break;
      case Family::Wilson:
        lo = 1e-9;
        hi = 18;
        panels = 6000;
        etad = [](double x) { return x * x; };
        break;
      default:  // Askey-Wilson
        lo = 1e-9;
        hi = M_PI - 1e-9;
        panels = 4000;
        etad = [](double x) { return std::cos(x); };
        break;
    }
    weight = [&m](double x) {
      return groundstate_weight(m, Scalar::floating(x)).to_double();
    };
    auto moment = [&](int n, int k) {
      return simpson(
          [&](double x) {
            const double e = etad(x);
            return weight(x) * P[n].eval(Scalar::floating(e)).to_double() *
                   P[k].eval(Scalar::floating(e)).to_double();
          },
          lo, hi, panels);
    };
    std::vector<double> norms(6);
    for (int n = 0; n <= 5; ++n) norms[n] = moment(n, n);
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(moment(n, k)) / std::sqrt(norms[n] * norms[k]));
  }
  line(10, "pdQM quadrature orthogonality (cont_hahn, wilson, askey_wilson; n, m <= 5, 1e-6)",
       worst <= 1e-6, "max normalized overlap " + fmt_double(worst));
}

// ------------------------------------------------------------------ 11
void criterion_unified() {
  bool ok = true;
  std::string bad;
  for (const Model& m : fixtures::all_nine()) {
    bool good = true;
    const PotentialCoefficients cf = recover_vkl(m);
    const UnifiedPotential u = build_unified_potential(cf, m.coordinate());
    const HtildeOp cat = htilde_of(m);
    for (int j = 0; j <= 6; ++j) {
      const Poly1 diff = u.op.apply(Poly1::monomial(j, Scalar(1), 'e')) -
                         cat.apply(Poly1::monomial(j, Scalar(1), 'e'));
      good = good && diff.is_zero();
    }
    if (!cat.oqm) {
      int done = 0;
      for (int k = 0; done < 6 && k < 40; ++k) {
        const Scalar v = m.coordinate().sample(k);
        try {
          good = good && (u.eval_plus(v) - cat.v_plus(v)).is_zero() &&
                 (u.eval_minus(v) - cat.v_minus(v)).is_zero();
          ++done;
        } catch (const DomainError&) {
          continue;
        }
      }
      good = good && done == 6;
    }
    ok = ok && good;
    if (!good) bad += std::string(family_name(m.family())) + " ";
  }
  line(11, "unified potential round trip recover_vkl -> build reproduces all nine exactly", ok,
       bad);
}

// ------------------------------------------------------------------ 12
void criterion_qes() {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<long> u(-9, 9), den(1, 4);
  const std::vector<Coordinate> cs = {
      fixtures::hahn().coordinate(), fixtures::racah().coordinate(),
      fixtures::qracah().coordinate(), fixtures::wilson().coordinate(),
      fixtures::laguerre().coordinate()};
  bool ok = true;
  for (int t = 0; t < 50; ++t) {
    PotentialCoefficients cf;
    cf.L = 3;
    cf.v0.assign(4, Scalar(0));
    cf.v1.assign(3, Scalar(0));
    for (auto& v : cf.v0) v = Scalar::rational(u(rng), den(rng));
    for (auto& v : cf.v1) v = Scalar::rational(u(rng), den(rng));
    if (cf.v0[3].is_zero() && cf.v1[2].is_zero()) cf.v0[3] = Scalar(1);
    const QesSpec spec = solve_compensation(cf, cs[t % cs.size()], 1 + t % 6);
    const Scalar leak = certify_invariance(spec);
    ok = ok && leak.is_exact() && leak.is_zero();
  }
  line(12, "QES: certify_invariance exactly 0 after solve_compensation "
           "(50 randomized rational L = 3 sets, M <= 6)",
       ok);

  bool red_ok = true;
  for (const Model& m : {fixtures::hahn(), fixtures::racah()}) {
    const PotentialCoefficients l2 = recover_vkl(m);
    PotentialCoefficients l3;
    l3.L = 3;
    l3.v0 = {l2.v0[0], l2.v0[1], l2.v0[2], Scalar(0)};
    l3.v1 = {l2.v1[0], l2.v1[1], Scalar(0)};
    const QesSpec spec = solve_compensation(l3, m.coordinate(), 5);
    const Matrix got = qes_restriction_matrix(spec);
    const Matrix want = htilde_matrix(m, 5);
    red_ok = red_ok && spec.e0.is_zero();
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j) red_ok = red_ok && got.at(i, j) == want.at(i, j);
  }
  line(12, "QES: vanishing L = 3 top row reduces exactly to the L = 2 solvable matrix", red_ok);

  bool dual_ok = true;
  std::string bad;
  for (const Model& m : fixtures::all_nine()) {
    const double r = dual_closure_check(m, 20, 11);
    dual_ok = dual_ok && r == 0.0;
    if (r != 0.0) bad += std::string(family_name(m.family())) + " ";
  }
  line(12, "dual closure pointwise residual exactly 0 for all nine models (20 samples)", dual_ok,
       bad);
}

}  // namespace

int main() {
  std::printf("acceptance checks (exact arithmetic where parameters are rational)\n");
  criterion_spectra();
  criterion_triangular();
  criterion_shape();
  criterion_closure_tables();
  criterion_closure_spectrum();
  criterion_heisenberg();
  criterion_ladder();
  criterion_crum();
  criterion_rodrigues();
  criterion_orthogonality();
  criterion_unified();
  criterion_qes();
  if (g_failures) {
    std::printf("FAILED: %d criterion check(s)\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria satisfied\n");
  return 0;
}
