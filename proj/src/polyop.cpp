#include "sdqm/polyop.hpp"

#include <random>

#include "sdqm/interpolate.hpp"

namespace sdqm {

namespace {

bool etas_collide(const std::vector<std::pair<Scalar, Scalar>>& pts, const Scalar& eta,
                  bool exact) {
  for (const auto& q : pts) {
    const Scalar d = q.first - eta;
    if (exact ? d.is_zero() : d.abs() < 1e-12) return true;
  }
  return false;
}

}  // namespace

Poly1 HtildeOp::apply(const Poly1& p) const {
  if (p.is_zero()) return Poly1({}, p.var());
  const int out_deg = p.degree() + L - 2;
  if (oqm) {
    // closed second-order form in eta: -c2 p'' - c1 p'
    const Poly1 img = (c2 * p.derivative().derivative() + c1 * p.derivative()) * Scalar(-1);
    return Poly1(img.coeffs(), p.var());
  }
  const int need = std::max(out_deg + 1, 1) + 1;  // one extra consistency point
  std::vector<std::pair<Scalar, Scalar>> pts;
  bool exact = true;
  for (int k = 0; static_cast<int>(pts.size()) < need; ++k) {
    if (k > need + 64)
      throw InterpolationError("resampling failure: could not collect distinct eta samples");
    const Scalar v = coord.sample(k);
    Scalar e, ep, em, vp, vm;
    try {
      e = coord.eta(v);
      ep = coord.eta_plus(v);
      em = coord.eta_minus(v);
      vp = v_plus(v);
      vm = v_minus(v);
    } catch (const DomainError&) {
      continue;  // pole sample: resample
    }
    if (etas_collide(pts, e, e.is_exact())) continue;
    const Scalar val =
        Scalar(eps) * (vp * (p.eval(ep) - p.eval(e)) + vm * (p.eval(em) - p.eval(e)));
    exact = exact && e.is_exact() && val.is_exact();
    pts.emplace_back(e, val);
  }
  Poly1 img = interpolate_poly(pts, std::max(out_deg, 0), 1e-9, p.var());
  return img;
}

HtildeOp htilde_of(const Model& m) {
  HtildeOp op;
  op.L = 2;
  op.eps = m.epsilon();
  op.coord = m.coordinate();
  const auto& p = m.params();
  switch (shift_type_of(m.family())) {
    case ShiftType::OQM: {
      op.oqm = true;
      op.c2 = m.coordinate().etaprime_sq();
      // c1 = eta'' + 2 w' eta', re-expressed in eta per family
      switch (m.family()) {
        case Family::Hermite:
          op.c1 = Poly1({Scalar(0), Scalar(-2)});
          break;
        case Family::Laguerre:
          op.c1 = Poly1({Scalar(4) * p.at("g") + Scalar(2), Scalar(-4)});
          break;
        default:  // Jacobi
          op.c1 = Poly1({Scalar(-4) * (p.at("g") - p.at("h")),
                         Scalar(-4) * (Scalar(1) + p.at("g") + p.at("h"))});
          break;
      }
      break;
    }
    case ShiftType::PDQM:
      op.v_plus = [m](const Scalar& v) { return potential(m, Which::Plus, v); };
      op.v_minus = [m](const Scalar& v) { return potential(m, Which::Minus, v); };
      break;
    case ShiftType::RDQM:
      op.v_plus = [m](const Scalar& v) { return rdqm_potential_var(m, Which::Plus, v); };
      op.v_minus = [m](const Scalar& v) { return rdqm_potential_var(m, Which::Minus, v); };
      break;
  }
  return op;
}

Poly1 apply_htilde(const Model& m, const Poly1& p) { return htilde_of(m).apply(p); }

Matrix htilde_matrix(const Model& m, int n) {
  if (n < 0) throw RangeError("htilde_matrix needs n >= 0");
  if (shift_type_of(m.family()) == ShiftType::RDQM && n > m.lattice_N())
    throw RangeError("htilde_matrix: n exceeds the lattice size N");
  const HtildeOp op = htilde_of(m);
  Matrix t(n + 1, n + 1, MatrixStructure::Dense);
  for (int j = 0; j <= n; ++j) {
    const Poly1 img = op.apply(Poly1::monomial(j, Scalar(1), 'e'));
    if (img.degree() > n)
      throw StructureError("htilde image leaves the polynomial subspace");
    for (int i = 0; i <= n; ++i) t.at(i, j) = img.coeff(i);
  }
  bool upper = true;
  for (int i = 0; i <= n && upper; ++i)
    for (int j = 0; j < i && upper; ++j) upper = t.at(i, j).is_zero();
  if (upper) t.set_structure(MatrixStructure::UpperTriangular);
  return t;
}

Poly1 eigenpolynomial(const Model& m, int n) {
  const Matrix t = htilde_matrix(m, n);
  const Scalar en = energy(m, n);
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);  // monic
  for (int j = n - 1; j >= 0; --j) {
    Scalar acc(0);
    for (int k = j + 1; k <= n; ++k) acc += t.at(j, k) * c[k];
    const Scalar diag = t.at(j, j) - en;
    if (diag.is_zero())
      throw StructureError("degenerate diagonal entries in eigenpolynomial solve");
    c[j] = -acc / diag;
  }
  return Poly1(std::move(c), 'e');
}

Recurrence three_term_recurrence(const Model& m, int n_max) {
  if (n_max < 0) throw RangeError("three_term_recurrence needs n_max >= 0");
  std::vector<Poly1> P;
  for (int k = 0; k <= n_max + 1; ++k) P.push_back(eigenpolynomial(m, k));
  Recurrence r;
  r.A.resize(n_max + 1);
  r.B.resize(n_max + 1);
  r.C.resize(n_max + 1, Scalar(0));
  for (int n = 0; n <= n_max; ++n) {
    Poly1 rest = P[n].shift_up() - P[n + 1];  // monic: A_n = 1
    r.A[n] = Scalar(1);
    r.B[n] = rest.coeff(n);
    rest = rest - P[n] * r.B[n];
    if (n >= 1) {
      r.C[n] = rest.coeff(n - 1);
      rest = rest - P[n - 1] * r.C[n];
    }
    if (rest.max_abs() > 1e-9)
      throw StructureError("three-term expansion residual beyond tolerance");
  }
  for (int n = 1; n <= n_max; ++n)
    if (!(r.A[n - 1] * r.C[n] > Scalar(0)))
      throw StructureError("A_{n-1} C_n > 0 violated in three-term recurrence");
  return r;
}

// ------------------------------------------------------------ unified potential

UnifiedPotential build_unified_potential(const PotentialCoefficients& coeffs,
                                         const Coordinate& coord, bool enforce_leading) {
  if (coeffs.L < 2 || static_cast<int>(coeffs.v0.size()) != coeffs.L + 1 ||
      static_cast<int>(coeffs.v1.size()) != coeffs.L)
    throw ValidationError("potential coefficients malformed for the declared L");
  if (enforce_leading && !coeffs.leading_nonzero())
    throw ValidationError("sum_{k+l=L} v_{k,l}^2 != 0 violated");
  UnifiedPotential u;
  u.coeffs = coeffs;
  u.op.L = coeffs.L;
  u.op.coord = coord;
  if (coord.type() == ShiftType::OQM) {
    u.op.oqm = true;
    u.op.eps = +1;
    // beta -> 0 limit: c2 = -(1/2) sum v_{k,l} eta^{k+l}, c1 = -sum v_{k,1} eta^k
    std::vector<Scalar> w_total(coeffs.L + 1, Scalar(0));
    for (int k = 0; k <= coeffs.L; ++k) w_total[k] = coeffs.v(k, 0);
    for (int k = 0; k + 1 <= coeffs.L; ++k) w_total[k + 1] += coeffs.v(k, 1);
    Poly1 wt(w_total);
    std::vector<Scalar> wl(coeffs.L, Scalar(0));
    for (int k = 0; k < coeffs.L; ++k) wl[k] = coeffs.v(k, 1);
    u.op.c2 = wt * Scalar::rational(-1, 2);
    u.op.c1 = Poly1(wl) * Scalar(-1);
    return u;
  }
  u.op.eps = coord.type() == ShiftType::RDQM ? -1 : +1;
  const PotentialCoefficients cf = coeffs;
  const Coordinate co = coord;
  u.op.v_plus = [cf, co](const Scalar& v) {
    const Scalar e = co.eta(v), ep = co.eta_plus(v), em = co.eta_minus(v);
    const Scalar den = (ep - e) * (ep - em);
    if (den.is_zero()) throw DomainError("unified potential denominator vanishes");
    Scalar vt(0);
    for (int k = 0; k <= cf.L; ++k)
      for (int l = 0; l <= 1 && k + l <= cf.L; ++l) vt += cf.v(k, l) * e.pow(k) * ep.pow(l);
    return vt / den;
  };
  u.op.v_minus = [cf, co](const Scalar& v) {
    const Scalar e = co.eta(v), ep = co.eta_plus(v), em = co.eta_minus(v);
    const Scalar den = (em - e) * (em - ep);
    if (den.is_zero()) throw DomainError("unified potential denominator vanishes");
    Scalar vt(0);
    for (int k = 0; k <= cf.L; ++k)
      for (int l = 0; l <= 1 && k + l <= cf.L; ++l) vt += cf.v(k, l) * e.pow(k) * em.pow(l);
    return vt / den;
  };
  return u;
}

PotentialCoefficients recover_vkl(const Model& m) {
  PotentialCoefficients cf;
  cf.L = 2;
  cf.v0.assign(3, Scalar(0));
  cf.v1.assign(2, Scalar(0));
  const Coordinate& co = m.coordinate();
  if (co.type() == ShiftType::OQM) {
    const HtildeOp op = htilde_of(m);
    // w_total = -2 c2, w_l = -c1; v_{k,0} = w_total[k] - v_{k-1,1}
    const Poly1 wt = op.c2 * Scalar(-2);
    const Poly1 wl = op.c1 * Scalar(-1);
    cf.v1[0] = wl.coeff(0);
    cf.v1[1] = wl.coeff(1);
    cf.v0[0] = wt.coeff(0);
    cf.v0[1] = wt.coeff(1) - cf.v1[0];
    cf.v0[2] = wt.coeff(2) - cf.v1[1];
    return cf;
  }
  // unknowns (v00, v10, v20, v01, v11); two equations per sample point
  const HtildeOp op = htilde_of(m);
  const int want_rows = 12;  // >= 6 points worth of equations
  Matrix a(want_rows, 5);
  std::vector<Scalar> b;
  int row = 0;
  for (int k = 0; row < want_rows; ++k) {
    if (k > want_rows + 64) throw StructureError("recover_vkl: not enough regular samples");
    const Scalar v = co.sample(k);
    Scalar e, ep, em, vp, vm;
    try {
      e = co.eta(v);
      ep = co.eta_plus(v);
      em = co.eta_minus(v);
      vp = op.v_plus(v);
      vm = op.v_minus(v);
    } catch (const DomainError&) {
      continue;
    }
    const Scalar dp = (ep - e) * (ep - em), dm = (em - e) * (em - ep);
    if (dp.is_zero() || dm.is_zero()) continue;
    a.at(row, 0) = Scalar(1);
    a.at(row, 1) = e;
    a.at(row, 2) = e * e;
    a.at(row, 3) = ep;
    a.at(row, 4) = e * ep;
    b.push_back(vp * dp);
    ++row;
    a.at(row, 0) = Scalar(1);
    a.at(row, 1) = e;
    a.at(row, 2) = e * e;
    a.at(row, 3) = em;
    a.at(row, 4) = e * em;
    b.push_back(vm * dm);
    ++row;
  }
  std::vector<Scalar> v;
  try {
    v = solve_exact_overdetermined(a, b);
  } catch (const StructureError&) {
    throw StructureError("recover_vkl: inconsistent system (coordinate/shift mismatch)");
  }
  cf.v0 = {v[0], v[1], v[2]};
  cf.v1 = {v[3], v[4]};
  return cf;
}

// ------------------------------------------------------------ dual closure

DualClosureData dual_closure_data(const Model& m) {
  DualClosureData d;
  const Coordinate& co = m.coordinate();
  if (co.type() == ShiftType::OQM) {
    // beta -> 0 limits of the shift differences: R0d, R1d -> 0 and
    // eps (V+ + V-) R0d -> -2 eta'^2
    d.R0d = Poly1({});
    d.R1d = Poly1({});
    d.Rm1d = co.etaprime_sq() * Scalar(-2);
    return d;
  }
  const HtildeOp op = htilde_of(m);
  std::vector<std::pair<Scalar, Scalar>> p1, p0, pm;
  for (int k = 0; static_cast<int>(pm.size()) < 5; ++k) {
    if (k > 80) throw StructureError("dual_closure_data: not enough regular samples");
    const Scalar v = co.sample(k);
    Scalar e, ep, em, vp, vm;
    try {
      e = co.eta(v);
      ep = co.eta_plus(v);
      em = co.eta_minus(v);
      vp = op.v_plus(v);
      vm = op.v_minus(v);
    } catch (const DomainError&) {
      continue;
    }
    if (etas_collide(p1, e, e.is_exact())) continue;
    p1.emplace_back(e, ep + em - Scalar(2) * e);
    p0.emplace_back(e, (ep - e) * (em - e) * Scalar(-1));
    pm.emplace_back(e, Scalar(op.eps) * (vp + vm) * (ep - e) * (em - e) * Scalar(-1));
  }
  d.R1d = interpolate_poly(p1, 1);
  d.R0d = interpolate_poly(p0, 2);
  d.Rm1d = interpolate_poly(pm, 2);
  return d;
}

double dual_closure_check(const Model& m, int trials, std::uint64_t seed) {
  const HtildeOp op = htilde_of(m);
  const DualClosureData d = dual_closure_data(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> deg(1, 6);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Scalar> c(deg(rng) + 1);
    for (auto& v : c) v = Scalar::rational(num(rng), den(rng));
    const Poly1 f(std::move(c), 'e');
    if (f.is_zero()) continue;
    const Poly1 eta_f = f.shift_up();
    const Poly1 eta2_f = eta_f.shift_up();
    const Poly1 lhs = op.apply(eta2_f) - op.apply(eta_f).shift_up() * Scalar(2) +
                      op.apply(f).shift_up().shift_up();
    auto comm_eta_h = [&](const Poly1& g) {
      // [eta, H~] g = eta H~ g - H~(eta g)
      return op.apply(g).shift_up() - op.apply(g.shift_up());
    };
    const Poly1 rhs = op.apply(d.R0d * f) + comm_eta_h(d.R1d * f) + d.Rm1d * f;
    worst = std::max(worst, (lhs - rhs).max_abs());
  }
  return worst;
}

}  // namespace sdqm
