#include "sdqm/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sdqm/special.hpp"

namespace sdqm {

namespace {

const Scalar kI = Scalar::gaussian(0, 1);

std::string canon(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '-' || c == '_' || c == ' ') continue;
    r += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return r;
}

void require_params(const std::map<std::string, Scalar>& p, std::initializer_list<const char*> keys,
                    Family f) {
  for (const char* k : keys)
    if (!p.count(k))
      throw ValidationError(std::string(family_name(f)) + ": missing parameter " + k);
  for (const auto& [k, v] : p) {
    bool known = false;
    for (const char* need : keys) known = known || k == need;
    if (!known)
      throw ValidationError(std::string(family_name(f)) + ": unexpected parameter " + k);
  }
}

void check(bool ok, const std::string& ineq) {
  if (!ok) throw ValidationError(ineq + " violated");
}

int int_param(const Scalar& v, const char* name) {
  if (!v.is_real()) throw ValidationError(std::string(name) + " must be a real integer");
  const mpq_class& q = v.rat();
  if (q.get_den() != 1) throw ValidationError(std::string(name) + " must be an integer");
  return static_cast<int>(q.get_num().get_si());
}

/// Multiset equality of {conj(a_j)} and {a_j}.
void check_conjugation_closure(std::vector<Scalar> as, Family f) {
  auto key = [](const Scalar& s) {
    return std::make_pair(s.exact_re(), s.exact_im());
  };
  bool exact = true;
  for (const auto& a : as) exact = exact && a.is_exact();
  if (exact) {
    std::vector<std::pair<mpq_class, mpq_class>> orig, conj;
    for (const auto& a : as) {
      orig.push_back(key(a));
      conj.push_back(key(a.conj()));
    }
    std::sort(orig.begin(), orig.end());
    std::sort(conj.begin(), conj.end());
    if (orig != conj)
      throw ValidationError(std::string(family_name(f)) +
                            ": {a1*,a2*,a3*,a4*} = {a1,a2,a3,a4} (as a set) violated");
    return;
  }
  std::vector<std::complex<double>> pool;
  for (const auto& a : as) pool.push_back(a.to_complex());
  for (const auto& a : as) {
    auto c = std::conj(a.to_complex());
    auto it = std::min_element(pool.begin(), pool.end(), [&](auto u, auto v) {
      return std::abs(u - c) < std::abs(v - c);
    });
    if (it == pool.end() || std::abs(*it - c) > 1e-12)
      throw ValidationError(std::string(family_name(f)) +
                            ": {a1*,a2*,a3*,a4*} = {a1,a2,a3,a4} (as a set) violated");
    pool.erase(it);
  }
}

Scalar racah_dtilde(const std::map<std::string, Scalar>& p) {
  // c = -N
  return p.at("a") + p.at("b") - p.at("N") - p.at("d") - Scalar(1);
}
Scalar qracah_c(const std::map<std::string, Scalar>& p) {
  return p.at("q").pow(-int_param(p.at("N"), "N"));
}
Scalar qracah_dtilde(const std::map<std::string, Scalar>& p) {
  return p.at("a") * p.at("b") * qracah_c(p) / (p.at("d") * p.at("q"));
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Jacobi: return "jacobi";
    case Family::ContHahn: return "cont_hahn";
    case Family::Wilson: return "wilson";
    case Family::AskeyWilson: return "askey_wilson";
    case Family::Hahn: return "hahn";
    case Family::Racah: return "racah";
    case Family::QRacah: return "q_racah";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  const std::string c = canon(name);
  if (c == "hermite") return Family::Hermite;
  if (c == "laguerre") return Family::Laguerre;
  if (c == "jacobi") return Family::Jacobi;
  if (c == "conthahn" || c == "continuoushahn") return Family::ContHahn;
  if (c == "wilson") return Family::Wilson;
  if (c == "askeywilson") return Family::AskeyWilson;
  if (c == "hahn") return Family::Hahn;
  if (c == "racah") return Family::Racah;
  if (c == "qracah") return Family::QRacah;
  return std::nullopt;
}

ShiftType shift_type_of(Family f) {
  switch (f) {
    case Family::Hermite:
    case Family::Laguerre:
    case Family::Jacobi: return ShiftType::OQM;
    case Family::ContHahn:
    case Family::Wilson:
    case Family::AskeyWilson: return ShiftType::PDQM;
    default: return ShiftType::RDQM;
  }
}

// ---------------------------------------------------------------- Coordinate

Coordinate::Coordinate(Family f, std::map<std::string, Scalar> params)
    : family_(f), p_(std::move(params)) {
  switch (f) {
    case Family::Hermite:
      etaprime_sq_ = Poly1({Scalar(1)});
      eta_second_ = Poly1({});
      break;
    case Family::Laguerre:
      etaprime_sq_ = Poly1({Scalar(0), Scalar(4)});
      eta_second_ = Poly1({Scalar(2)});
      break;
    case Family::Jacobi:
      etaprime_sq_ = Poly1({Scalar(4), Scalar(0), Scalar(-4)});
      eta_second_ = Poly1({Scalar(0), Scalar(-4)});
      break;
    default: break;
  }
}

Scalar Coordinate::eta(const Scalar& v) const {
  switch (family_) {
    case Family::Hermite:
    case Family::Laguerre:
    case Family::Jacobi: return v;  // oQM works directly in the eta variable
    case Family::ContHahn:
    case Family::Hahn: return v;
    case Family::Wilson: return v * v;
    case Family::AskeyWilson: return (v + Scalar(1) / v) / Scalar(2);
    case Family::Racah: return v * (v + p_.at("d"));
    case Family::QRacah:
      return (Scalar(1) / v - Scalar(1)) * (Scalar(1) - p_.at("d") * v);
  }
  throw DomainError("unreachable");
}

Scalar Coordinate::eta_plus(const Scalar& v) const {
  switch (family_) {
    case Family::ContHahn: return v - kI;
    case Family::Wilson: return (v - kI) * (v - kI);
    case Family::AskeyWilson: {
      const Scalar& q = p_.at("q");
      return (q * v + Scalar(1) / (q * v)) / Scalar(2);
    }
    case Family::Hahn: return v + Scalar(1);
    case Family::Racah: return (v + Scalar(1)) * (v + Scalar(1) + p_.at("d"));
    case Family::QRacah: return eta(p_.at("q") * v);
    default: throw DomainError("eta shift undefined for oQM coordinates");
  }
}

Scalar Coordinate::eta_minus(const Scalar& v) const {
  switch (family_) {
    case Family::ContHahn: return v + kI;
    case Family::Wilson: return (v + kI) * (v + kI);
    case Family::AskeyWilson: {
      const Scalar& q = p_.at("q");
      return (v / q + q / v) / Scalar(2);
    }
    case Family::Hahn: return v - Scalar(1);
    case Family::Racah: return (v - Scalar(1)) * (v - Scalar(1) + p_.at("d"));
    case Family::QRacah: return eta(v / p_.at("q"));
    default: throw DomainError("eta shift undefined for oQM coordinates");
  }
}

Scalar Coordinate::sample(int k) const {
  switch (family_) {
    case Family::Wilson: return Scalar(k + 1);       // avoid the x = 0 pole
    case Family::AskeyWilson: return Scalar(k + 2);  // z > 1 keeps eta distinct
    case Family::QRacah: return p_.at("q").pow(k);
    default: return Scalar(k);
  }
}

const Poly1& Coordinate::etaprime_sq() const { return etaprime_sq_; }
const Poly1& Coordinate::eta_second() const { return eta_second_; }

Scalar Coordinate::lattice_var(int x) const {
  switch (family_) {
    case Family::Hahn:
    case Family::Racah: return Scalar(x);
    case Family::QRacah: return p_.at("q").pow(x);
    default: throw DomainError("lattice variable defined only for rdQM coordinates");
  }
}

// ---------------------------------------------------------------- make_model

Model make_model(Family f, const std::map<std::string, Scalar>& raw) {
  std::map<std::string, Scalar> p = raw;
  switch (f) {
    case Family::Hermite:
      require_params(p, {}, f);
      break;
    case Family::Laguerre:
      require_params(p, {"g"}, f);
      check(p.at("g") > Scalar(1), "g>1");
      break;
    case Family::Jacobi:
      require_params(p, {"g", "h"}, f);
      check(p.at("g") > Scalar(1), "g>1");
      check(p.at("h") > Scalar(1), "h>1");
      break;
    case Family::ContHahn:
      require_params(p, {"a1", "a2"}, f);
      check(p.at("a1").real() > Scalar(0), "Re(a1)>0");
      check(p.at("a2").real() > Scalar(0), "Re(a2)>0");
      break;
    case Family::Wilson: {
      require_params(p, {"a1", "a2", "a3", "a4"}, f);
      std::vector<Scalar> as = {p.at("a1"), p.at("a2"), p.at("a3"), p.at("a4")};
      for (int j = 0; j < 4; ++j)
        check(as[j].real() > Scalar(0), "Re(a" + std::to_string(j + 1) + ")>0");
      check_conjugation_closure(as, f);
      break;
    }
    case Family::AskeyWilson: {
      require_params(p, {"a1", "a2", "a3", "a4", "q"}, f);
      check(p.at("q") > Scalar(0) && p.at("q") < Scalar(1), "0<q<1");
      std::vector<Scalar> as = {p.at("a1"), p.at("a2"), p.at("a3"), p.at("a4")};
      for (int j = 0; j < 4; ++j) {
        const Scalar norm = as[j].real() * as[j].real() + as[j].imag() * as[j].imag();
        check(norm < Scalar(1), "|a" + std::to_string(j + 1) + "|<1");
      }
      check_conjugation_closure(as, f);
      break;
    }
    case Family::Hahn: {
      require_params(p, {"a", "b", "N"}, f);
      check(p.at("a") > Scalar(0), "a>0");
      check(p.at("b") > Scalar(0), "b>0");
      check(int_param(p.at("N"), "N") >= 0, "N>=0");  // N=0 closes the Rodrigues chain
      break;
    }
    case Family::Racah: {
      require_params(p, {"a", "b", "d", "N"}, f);
      const int N = int_param(p.at("N"), "N");
      check(N >= 0, "N>=0");
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d");
      check(d > Scalar(0), "d>0");
      check(b > Scalar(0) && b < Scalar(1) + d, "0<b<1+d");
      check(a >= b, "a>=b");
      check(a > Scalar(N) + d, "a>N+d");
      for (int x = 0; x <= N; ++x) {
        const Scalar tx = Scalar(2 * x) + d;
        if (tx.is_zero() || (tx + Scalar(1)).is_zero() || (tx - Scalar(1)).is_zero())
          throw ValidationError("racah: lattice pole, 2x+d in {0,-1,1} at x=" + std::to_string(x));
      }
      break;
    }
    case Family::QRacah: {
      require_params(p, {"a", "b", "d", "q", "N"}, f);
      const int N = int_param(p.at("N"), "N");
      check(N >= 0, "N>=0");
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d"), &q = p.at("q");
      check(q > Scalar(0) && q < Scalar(1), "0<q<1");
      check(d > Scalar(0) && d < Scalar(1), "0<d<1");
      check(a > Scalar(0) && a < q.pow(N) * d, "0<a<q^N d");
      check(b > q * d && b < Scalar(1), "qd<b<1");
      check(a <= b, "a<=b");
      check(qracah_dtilde(p) < Scalar(1) / q, "dtilde<q^-1");
      for (int x = 0; x <= N; ++x) {
        const Scalar q2x = q.pow(2 * x);
        if ((Scalar(1) - d * q2x).is_zero() || (Scalar(1) - d * q * q2x).is_zero() ||
            (Scalar(1) - d * q2x / q).is_zero())
          throw ValidationError("q_racah: lattice pole, 1-dq^(2x+-1) = 0 at x=" + std::to_string(x));
      }
      break;
    }
  }
  Model m(f, std::move(p));
  // rdQM boundary and positivity invariants
  if (shift_type_of(f) == ShiftType::RDQM) {
    const int N = m.lattice_N();
    if (!potential(m, Which::Minus, Scalar(0)).is_zero())
      throw ValidationError(std::string(family_name(f)) + ": D(0)=0 violated");
    if (!potential(m, Which::Plus, Scalar(N)).is_zero())
      throw ValidationError(std::string(family_name(f)) + ": B(N)=0 violated");
    for (int x = 0; x <= N; ++x) {
      if (potential(m, Which::Plus, Scalar(x)) < Scalar(0))
        throw ValidationError(std::string(family_name(f)) + ": B(x)>=0 violated at x=" +
                              std::to_string(x));
      if (potential(m, Which::Minus, Scalar(x)) < Scalar(0))
        throw ValidationError(std::string(family_name(f)) + ": D(x)>=0 violated at x=" +
                              std::to_string(x));
    }
  }
  return m;
}

ShiftKind Model::shift() const {
  ShiftKind k;
  k.type = shift_type_of(family_);
  switch (family_) {
    case Family::ContHahn:
    case Family::Wilson:
      k.gamma = Scalar(1);
      break;
    case Family::AskeyWilson:
      k.gamma = Scalar::floating(std::log(p_.at("q").to_double()));  // log q < 0
      break;
    case Family::Hahn:
    case Family::Racah:
    case Family::QRacah:
      k.lattice_N = lattice_N();
      break;
    default: break;
  }
  return k;
}

const Scalar& Model::param(const std::string& key) const {
  auto it = p_.find(key);
  if (it == p_.end()) throw DomainError("no parameter " + key);
  return it->second;
}

int Model::lattice_N() const {
  if (shift_type_of(family_) != ShiftType::RDQM)
    throw DomainError("lattice size defined only for rdQM models");
  return int_param(p_.at("N"), "N");
}

Scalar Model::kappa() const {
  if (family_ == Family::AskeyWilson || family_ == Family::QRacah)
    return Scalar(1) / p_.at("q");
  return Scalar(1);
}

Model Model::shifted() const {
  std::map<std::string, Scalar> p = p_;
  const Scalar half = Scalar::rational(1, 2);
  switch (family_) {
    case Family::Hermite: break;
    case Family::Laguerre: p["g"] += Scalar(1); break;
    case Family::Jacobi:
      p["g"] += Scalar(1);
      p["h"] += Scalar(1);
      break;
    case Family::ContHahn:
      p["a1"] += half;
      p["a2"] += half;
      break;
    case Family::Wilson:
      for (const char* k : {"a1", "a2", "a3", "a4"}) p[k] += half;
      break;
    case Family::AskeyWilson: {
      const Scalar sq = p_.at("q").sqrt();
      for (const char* k : {"a1", "a2", "a3", "a4"}) p[k] *= sq;
      break;
    }
    case Family::Hahn:
      p["a"] += Scalar(1);
      p["b"] += Scalar(1);
      p["N"] -= Scalar(1);
      break;
    case Family::Racah:
      p["a"] += Scalar(1);
      p["b"] += Scalar(1);
      p["d"] += Scalar(1);
      p["N"] -= Scalar(1);
      break;
    case Family::QRacah: {
      const Scalar& q = p_.at("q");
      p["a"] *= q;
      p["b"] *= q;
      p["d"] *= q;
      p["N"] -= Scalar(1);
      break;
    }
  }
  return make_model(family_, p);
}

// ---------------------------------------------------------------- potentials

namespace {

Scalar pdqm_v(const Model& m, Which which, const Scalar& v) {
  const auto& p = m.params();
  switch (m.family()) {
    case Family::ContHahn: {
      const Scalar ix = kI * v;
      if (which == Which::Plus) return (p.at("a1") + ix) * (p.at("a2") + ix);
      return (p.at("a1").conj() - ix) * (p.at("a2").conj() - ix);
    }
    case Family::Wilson: {
      const Scalar ix = kI * v;
      if (which == Which::Plus) {
        const Scalar den = (Scalar(2) * ix) * (Scalar(2) * ix + Scalar(1));
        if (den.is_zero()) throw DomainError("wilson potential pole: 2ix(2ix+1) = 0");
        Scalar num(1);
        for (const char* k : {"a1", "a2", "a3", "a4"}) num *= p.at(k) + ix;
        return num / den;
      }
      const Scalar den = (Scalar(-2) * ix) * (Scalar(-2) * ix + Scalar(1));
      if (den.is_zero()) throw DomainError("wilson potential pole: 2ix(2ix-1) = 0");
      Scalar num(1);
      for (const char* k : {"a1", "a2", "a3", "a4"}) num *= p.at(k).conj() - ix;
      return num / den;
    }
    case Family::AskeyWilson: {
      const Scalar& q = p.at("q");
      const Scalar z = (which == Which::Plus) ? v : Scalar(1) / v;
      const Scalar den = (Scalar(1) - z * z) * (Scalar(1) - q * z * z);
      if (den.is_zero()) throw DomainError("askey_wilson potential pole: (1-z^2)(1-qz^2) = 0");
      Scalar num(1);
      for (const char* k : {"a1", "a2", "a3", "a4"}) {
        const Scalar a = (which == Which::Plus) ? p.at(k) : p.at(k).conj();
        num *= Scalar(1) - a * z;
      }
      return num / den;
    }
    default: throw DomainError("not a pdQM family");
  }
}

}  // namespace

/// B/D in the rdQM evaluation variable (x for Hahn/Racah, u = q^x for
/// q-Racah); used by the polynomial engine off the lattice as well.
Scalar rdqm_potential_var(const Model& m, Which which, const Scalar& v) {
  const auto& p = m.params();
  switch (m.family()) {
    case Family::Hahn: {
      const Scalar N = p.at("N");
      if (which == Which::Plus) return (v + p.at("a")) * (N - v);
      return v * (p.at("b") + N - v);
    }
    case Family::Racah: {
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d");
      const Scalar c = -p.at("N");
      if (which == Which::Plus) {
        const Scalar den = (Scalar(2) * v + d) * (Scalar(2) * v + Scalar(1) + d);
        if (den.is_zero()) throw DomainError("racah potential pole: (2x+d)(2x+1+d) = 0");
        return -((v + a) * (v + b) * (v + c) * (v + d)) / den;
      }
      const Scalar den = (Scalar(2) * v - Scalar(1) + d) * (Scalar(2) * v + d);
      if (den.is_zero()) throw DomainError("racah potential pole: (2x-1+d)(2x+d) = 0");
      return -((v + d - a) * (v + d - b) * (v + d - c) * v) / den;
    }
    case Family::QRacah: {
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d"), &q = p.at("q");
      const Scalar c = qracah_c(p);
      const Scalar u2 = v * v;
      if (which == Which::Plus) {
        const Scalar den = (Scalar(1) - d * u2) * (Scalar(1) - d * q * u2);
        if (den.is_zero()) throw DomainError("q_racah potential pole: (1-dq^2x)(1-dq^2x+1) = 0");
        return -((Scalar(1) - a * v) * (Scalar(1) - b * v) * (Scalar(1) - c * v) *
                 (Scalar(1) - d * v)) /
               den;
      }
      const Scalar den = (Scalar(1) - d * u2 / q) * (Scalar(1) - d * u2);
      if (den.is_zero()) throw DomainError("q_racah potential pole: (1-dq^2x-1)(1-dq^2x) = 0");
      return -qracah_dtilde(p) *
             ((Scalar(1) - d * v / a) * (Scalar(1) - d * v / b) * (Scalar(1) - d * v / c) *
              (Scalar(1) - v)) /
             den;
    }
    default: throw DomainError("not an rdQM family");
  }
}

Scalar potential(const Model& m, Which which, const Scalar& x) {
  const auto& p = m.params();
  switch (shift_type_of(m.family())) {
    case ShiftType::OQM: {
      if (which == Which::Minus)
        throw DomainError("oQM exposes only the prepotential derivative (plus branch)");
      switch (m.family()) {
        case Family::Hermite: return -x;
        case Family::Laguerre:
          if (x.is_zero()) throw DomainError("laguerre w'(x) pole at x=0");
          return -x + p.at("g") / x;
        default: {  // Jacobi, trigonometric: float evaluation
          const double xv = x.to_double();
          const double s = std::sin(xv), c = std::cos(xv);
          if (s == 0.0 || c == 0.0) throw DomainError("jacobi w'(x) pole");
          return Scalar::floating(p.at("g").to_double() * c / s -
                                  p.at("h").to_double() * s / c);
        }
      }
    }
    case ShiftType::PDQM: return pdqm_v(m, which, x);
    case ShiftType::RDQM: {
      // x is the lattice coordinate; q-Racah maps it to u = q^x
      Scalar v = x;
      if (m.family() == Family::QRacah) {
        if (!x.is_real() || x.rat().get_den() != 1)
          throw DomainError("q_racah potential takes an integer lattice point");
        v = p.at("q").pow(x.rat().get_num().get_si());
      }
      return rdqm_potential_var(m, which, v);
    }
  }
  throw DomainError("unreachable");
}

Scalar oqm_u_potential(const Model& m, const Scalar& x) {
  const auto& p = m.params();
  switch (m.family()) {
    case Family::Hermite: return x * x - Scalar(1);
    case Family::Laguerre: {
      if (x.is_zero()) throw DomainError("laguerre U(x) pole at x=0");
      const Scalar& g = p.at("g");
      return x * x + g * (g - Scalar(1)) / (x * x) - Scalar(1) - Scalar(2) * g;
    }
    case Family::Jacobi: {
      const double xv = x.to_double();
      const double g = p.at("g").to_double(), h = p.at("h").to_double();
      const double s2 = std::sin(xv) * std::sin(xv), c2 = std::cos(xv) * std::cos(xv);
      if (s2 == 0.0 || c2 == 0.0) throw DomainError("jacobi U(x) pole");
      return Scalar::floating(g * (g - 1) / s2 + h * (h - 1) / c2 - (g + h) * (g + h));
    }
    default: throw DomainError("U(x) defined for oQM families only");
  }
}

// ---------------------------------------------------------------- energies

namespace {

Scalar pdqm_b1(const Model& m) {
  const auto& p = m.params();
  if (m.family() == Family::ContHahn) {
    const Scalar s = p.at("a1") + p.at("a2");
    return s + s.conj();  // 2 Re(a1+a2)
  }
  return p.at("a1") + p.at("a2") + p.at("a3") + p.at("a4");
}

Scalar aw_b4(const Model& m) {
  const auto& p = m.params();
  return p.at("a1") * p.at("a2") * p.at("a3") * p.at("a4");
}

}  // namespace

Scalar energy(const Model& m, int n) {
  if (n < 0) throw RangeError("energy level n must be >= 0");
  if (shift_type_of(m.family()) == ShiftType::RDQM && n > m.lattice_N())
    throw RangeError("energy level n exceeds the lattice size N");
  const auto& p = m.params();
  const Scalar ns(static_cast<long>(n));
  switch (m.family()) {
    case Family::Hermite: return Scalar(2) * ns;
    case Family::Laguerre: return Scalar(4) * ns;
    case Family::Jacobi: return Scalar(4) * ns * (ns + p.at("g") + p.at("h"));
    case Family::ContHahn:
    case Family::Wilson: return ns * (ns + pdqm_b1(m) - Scalar(1));
    case Family::AskeyWilson: {
      const Scalar& q = p.at("q");
      return (q.pow(-n) - Scalar(1)) * (Scalar(1) - aw_b4(m) * q.pow(n - 1));
    }
    case Family::Hahn: return ns * (ns + p.at("a") + p.at("b") - Scalar(1));
    case Family::Racah: return ns * (ns + racah_dtilde(p));
    case Family::QRacah: {
      const Scalar& q = p.at("q");
      return (q.pow(-n) - Scalar(1)) * (Scalar(1) - qracah_dtilde(p) * q.pow(n));
    }
  }
  throw DomainError("unreachable");
}

Scalar energy_printed(const Model& m, int n) {
  const auto& p = m.params();
  switch (m.family()) {
    case Family::ContHahn:
    case Family::Wilson:
    case Family::Hahn:
    case Family::Racah: return Scalar(4) * energy(m, n);
    case Family::QRacah: {
      const Scalar& q = p.at("q");
      return (q.pow(-n) - Scalar(1)) * (Scalar(1) - qracah_dtilde(p) * q.pow(n - 1));
    }
    default: return energy(m, n);
  }
}

bool energy_flagged(Family f) {
  switch (f) {
    case Family::ContHahn:
    case Family::Wilson:
    case Family::Hahn:
    case Family::Racah:
    case Family::QRacah: return true;
    default: return false;
  }
}

const char* energy_flag_citation() { return "\xc2\xa7""2.3 data blocks"; }

// ---------------------------------------------------------------- weights

Scalar groundstate_weight(const Model& m, const Scalar& x) {
  const auto& p = m.params();
  switch (m.family()) {
    case Family::Hermite:
      return Scalar::floating(std::exp(-x.to_double() * x.to_double()));
    case Family::Laguerre: {
      const double xv = x.to_double();
      if (xv <= 0) throw DomainError("laguerre weight needs x > 0");
      return Scalar::floating(std::exp(-xv * xv) * std::pow(xv, 2 * p.at("g").to_double()));
    }
    case Family::Jacobi: {
      const double xv = x.to_double();
      return Scalar::floating(std::pow(std::sin(xv), 2 * p.at("g").to_double()) *
                              std::pow(std::cos(xv), 2 * p.at("h").to_double()));
    }
    case Family::ContHahn: {
      const std::complex<double> ix(0.0, x.to_double());
      const auto lg = log_gamma(p.at("a1").to_complex() + ix) +
                      log_gamma(p.at("a2").to_complex() + ix);
      return Scalar::floating(std::exp(2.0 * lg.real()));
    }
    case Family::Wilson: {
      const std::complex<double> ix(0.0, x.to_double());
      std::complex<double> lg = 0.0;
      for (const char* k : {"a1", "a2", "a3", "a4"}) lg += log_gamma(p.at(k).to_complex() + ix);
      const auto lg2 = log_gamma(2.0 * ix);  // throws at x = 0
      return Scalar::floating(std::exp(2.0 * lg.real() - 2.0 * lg2.real()));
    }
    case Family::AskeyWilson: {
      const double xv = x.to_double();
      const std::complex<double> z = std::exp(std::complex<double>(0.0, xv));
      const Scalar q = p.at("q");
      auto qp = [&](std::complex<double> a) {
        return q_pochhammer_inf(Scalar::floating(a), q).to_complex();
      };
      std::complex<double> w = qp(z * z) * qp(std::conj(z * z));
      for (const char* k : {"a1", "a2", "a3", "a4"}) {
        const std::complex<double> a = p.at(k).to_complex();
        w /= qp(a * z) * qp(a * std::conj(z));
      }
      return Scalar::floating(w.real());
    }
    case Family::Hahn:
    case Family::Racah:
    case Family::QRacah: {
      if (!x.is_real() || !x.is_exact() || x.rat().get_den() != 1)
        throw DomainError("rdQM weight takes an integer lattice point");
      const long xv = x.rat().get_num().get_si();
      if (xv < 0 || xv > m.lattice_N()) throw DomainError("lattice point out of range");
      Scalar w(1);
      for (long y = 0; y < xv; ++y)
        w *= potential(m, Which::Plus, Scalar(y)) / potential(m, Which::Minus, Scalar(y + 1));
      return w;
    }
  }
  throw DomainError("unreachable");
}

Scalar groundstate_weight_closed_form(const Model& m, int x) {
  const auto& p = m.params();
  switch (m.family()) {
    case Family::Hahn: {
      const int N = m.lattice_N();
      // N! / (x! (N-x)!) * (a)_x (b)_{N-x} / (b)_N
      Scalar r = pochhammer(Scalar(1), N) /
                 (pochhammer(Scalar(1), x) * pochhammer(Scalar(1), N - x));
      r *= pochhammer(p.at("a"), x) * pochhammer(p.at("b"), N - x) / pochhammer(p.at("b"), N);
      return r;
    }
    case Family::Racah: {
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d");
      const Scalar c = -p.at("N");
      Scalar num = pochhammer(a, x) * pochhammer(b, x) * pochhammer(c, x) * pochhammer(d, x);
      Scalar den = pochhammer(Scalar(1) + d - a, x) * pochhammer(Scalar(1) + d - b, x) *
                   pochhammer(Scalar(1) + d - c, x) * pochhammer(Scalar(1), x);
      return num / den * (Scalar(2 * x) + d) / d;
    }
    case Family::QRacah: {
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d"), &q = p.at("q");
      const Scalar c = qracah_c(p);
      const Scalar dt = qracah_dtilde(p);
      Scalar num = q_pochhammer(a, q, x) * q_pochhammer(b, q, x) * q_pochhammer(c, q, x) *
                   q_pochhammer(d, q, x);
      Scalar den = q_pochhammer(d * q / a, q, x) * q_pochhammer(d * q / b, q, x) *
                   q_pochhammer(d * q / c, q, x) * q_pochhammer(q, q, x) * dt.pow(x);
      return num / den * (Scalar(1) - d * q.pow(2 * x)) / (Scalar(1) - d);
    }
    default: throw DomainError("closed-form weight implemented for the rdQM families");
  }
}

// ---------------------------------------------------------------- closure tables

namespace {

Poly1 constant_poly(const Scalar& c) { return Poly1({c}); }

}  // namespace

ClosureData closure_table(const Model& m) {
  const auto& p = m.params();
  ClosureData t;
  t.provenance = ClosureData::Provenance::PaperTable;
  switch (m.family()) {
    case Family::Hermite:
      t.R0 = constant_poly(Scalar(4));
      t.R1 = Poly1({});
      t.Rm1 = Poly1({});
      break;
    case Family::Laguerre:
      t.R0 = constant_poly(Scalar(16));
      t.R1 = Poly1({});
      t.Rm1 = Poly1({Scalar(-8) * (Scalar(2) * p.at("g") + Scalar(1)), Scalar(-8)});
      break;
    case Family::Jacobi: {
      const Scalar gh = p.at("g") + p.at("h");
      t.R0 = Poly1({Scalar(16) * gh * gh, Scalar(16)});
      t.R1 = Poly1({});
      t.Rm1 = constant_poly(Scalar(16) * (p.at("g") - p.at("h")) * (gh - Scalar(1)));
      break;
    }
    case Family::ContHahn: {
      const Scalar s = p.at("a1") + p.at("a2");
      const Scalar re = (s + s.conj()) / Scalar(2);
      const Scalar im = (s - s.conj()) / (Scalar(2) * kI);
      const Scalar prod = p.at("a1") * p.at("a2");
      const Scalar imp = (prod - prod.conj()) / (Scalar(2) * kI);
      t.R0 = Poly1({Scalar(4) * re * (re - Scalar(1)), Scalar(4)});
      t.R1 = constant_poly(Scalar(2));
      t.Rm1 = Poly1({Scalar(4) * (re - Scalar(1)) * imp, Scalar(2) * im});
      break;
    }
    case Family::Wilson: {
      const Scalar b1 = pdqm_b1(m);
      Scalar b2(0), b3(0);
      const char* ks[4] = {"a1", "a2", "a3", "a4"};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          b2 += p.at(ks[i]) * p.at(ks[j]);
          for (int k = j + 1; k < 4; ++k) b3 += p.at(ks[i]) * p.at(ks[j]) * p.at(ks[k]);
        }
      t.R0 = Poly1({b1 * (b1 - Scalar(2)), Scalar(4)});
      t.R1 = constant_poly(Scalar(2));
      t.Rm1 = Poly1({(Scalar(2) - b1) * b3, b1 - Scalar(2) * b2, Scalar(-2)});
      break;
    }
    case Family::AskeyWilson: {
      const Scalar& q = p.at("q");
      const Scalar s = q + Scalar(1) / q - Scalar(2);   // (q^-1/2 - q^1/2)^2
      const Scalar u = q + Scalar(1) / q + Scalar(2);   // (q^-1/2 + q^1/2)^2
      const Scalar b4 = aw_b4(m);
      Scalar b1(0), b3(0);
      const char* ks[4] = {"a1", "a2", "a3", "a4"};
      for (int i = 0; i < 4; ++i) {
        b1 += p.at(ks[i]);
        for (int j = i + 1; j < 4; ++j)
          for (int k = j + 1; k < 4; ++k) b3 += p.at(ks[i]) * p.at(ks[j]) * p.at(ks[k]);
      }
      const Scalar c = Scalar(1) + b4 / q;  // y' = y + c
      // R1 = s y'; R0 = s (y'^2 - (1+q^-1)^2 b4); Rm1 as printed
      t.R1 = Poly1({s * c, s});
      t.R0 = Poly1({s * (c * c - u / q * b4), Scalar(2) * s * c, s});
      const Scalar w1 = b1 + b3 / q;
      const Scalar w0 = (Scalar(1) + Scalar(1) / q) * (b3 + b1 * b4 / q);
      const Scalar half = Scalar::rational(1, 2);
      t.Rm1 = Poly1({-half * s * (w1 * c - w0), -half * s * w1});
      break;
    }
    case Family::Hahn: {
      const Scalar ab = p.at("a") + p.at("b");
      const Scalar& N = p.at("N");
      t.R0 = Poly1({(ab - Scalar(2)) * ab, Scalar(4)});
      t.R1 = constant_poly(Scalar(2));
      t.Rm1 = Poly1({-p.at("a") * (ab - Scalar(2)) * N, -(Scalar(2) * N - p.at("a") + p.at("b"))});
      break;
    }
    case Family::Racah: {
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d");
      const Scalar c = -p.at("N");
      const Scalar dt = racah_dtilde(p);
      const Scalar b2 = a * b + b * c + c * a;
      t.R0 = Poly1({dt * dt - Scalar(1), Scalar(4)});
      t.R1 = constant_poly(Scalar(2));
      t.Rm1 = Poly1({a * b * c * (dt - Scalar(1)),
                     Scalar(2) * b2 - (Scalar(1) + d) * (Scalar(1) + dt), Scalar(2)});
      break;
    }
    case Family::QRacah: {
      const Scalar &a = p.at("a"), &b = p.at("b"), &d = p.at("d"), &q = p.at("q");
      const Scalar c = qracah_c(p);
      const Scalar dt = qracah_dtilde(p);
      const Scalar s = q + Scalar(1) / q - Scalar(2);
      const Scalar u = q + Scalar(1) / q + Scalar(2);
      const Scalar cc = Scalar(1) + dt;  // y' = y + cc
      t.R1 = Poly1({s * cc, s});
      t.R0 = Poly1({s * (cc * cc - u * dt), Scalar(2) * s * cc, s});
      const Scalar b2 = a * b + b * c + c * a;
      const Scalar A = Scalar(1) + d;                                        // y'^2
      const Scalar B_ = a + b + c + d + dt + b2 / q;                         // -y'
      const Scalar C_ = ((Scalar(1) - a) * (Scalar(1) - b) * (Scalar(1) - c) *
                             (Scalar(1) - dt / q) +
                         (a + b + c - Scalar(1) - d * dt + b2 / q)) *
                        (Scalar(1) + dt);
      // s (A y'^2 - B y' + C), y' = y + cc
      t.Rm1 = Poly1({s * (A * cc * cc - B_ * cc + C_), s * (Scalar(2) * A * cc - B_), s * A});
      break;
    }
  }
  return t;
}

bool closure_table_suspect(Family f) {
  return f == Family::Jacobi || f == Family::QRacah;
}

}  // namespace sdqm
