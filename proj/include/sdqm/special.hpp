#pragma once

#include <complex>
#include <optional>

#include "sdqm/scalar.hpp"

namespace sdqm {

/// Rising factorial a(a+1)...(a+n-1); 1 for n = 0. Exact on exact input.
Scalar pochhammer(const Scalar& a, unsigned n);

/// Finite q-shifted factorial prod_{k=0}^{n-1} (1 - a q^k).
Scalar q_pochhammer(const Scalar& a, const Scalar& q, unsigned n);

/// Infinite q-shifted factorial (a; q)_inf, |q| < 1. The product is
/// truncated once the multiplicative correction differs from 1 by
/// less than `tol`; a hard cap of 1e5 factors guards q -> 1.
/// Throws DomainError for |q| >= 1.
Scalar q_pochhammer_inf(const Scalar& a, const Scalar& q, double tol = 1e-16);

/// Principal-branch log Gamma(s) for complex s, >= 12 significant
/// digits on Re(s) in [0.5, 50], |Im(s)| <= 50; reflection/recurrence
/// elsewhere. Throws DomainError at the poles (non-positive integers).
std::complex<double> log_gamma(std::complex<double> s);

}  // namespace sdqm
