#include "sdqm/special.hpp"

#include <cmath>

namespace sdqm {

Scalar pochhammer(const Scalar& a, unsigned n) {
  Scalar r(1);
  for (unsigned k = 0; k < n; ++k) r *= a + Scalar(static_cast<long>(k));
  return r;
}

Scalar q_pochhammer(const Scalar& a, const Scalar& q, unsigned n) {
  Scalar r(1), qk(1);
  for (unsigned k = 0; k < n; ++k) {
    r *= Scalar(1) - a * qk;
    qk *= q;
  }
  return r;
}

Scalar q_pochhammer_inf(const Scalar& a, const Scalar& q, double tol) {
  if (q.abs() >= 1.0) throw DomainError("(a;q)_inf needs |q| < 1");
  std::complex<double> ac = a.to_complex(), qc = q.to_complex();
  std::complex<double> r = 1.0, t = ac;
  constexpr long kMaxFactors = 100000;
  for (long k = 0; k < kMaxFactors; ++k) {
    if (std::abs(t) < tol) break;
    r *= (1.0 - t);
    t *= qc;
  }
  return Scalar::floating(r);
}

namespace {

// Lanczos, g = 7, 9 terms
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> log_gamma_core(std::complex<double> s) {
  // valid for Re(s) >= 0.5
  const std::complex<double> z = s - 1.0;
  std::complex<double> acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + static_cast<double>(k));
  const std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
    throw DomainError("log_gamma pole at non-positive integer");
  if (s.real() >= 0.5) return log_gamma_core(s);
  // recurrence: log Gamma(s) = log Gamma(s+n) - sum log(s+k)
  const int n = static_cast<int>(std::ceil(0.5 - s.real()));
  std::complex<double> shift = 0.0;
  for (int k = 0; k < n; ++k) shift += std::log(s + static_cast<double>(k));
  return log_gamma_core(s + static_cast<double>(n)) - shift;
}

}  // namespace sdqm
