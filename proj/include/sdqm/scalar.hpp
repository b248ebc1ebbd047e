#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace sdqm {

/// Thrown when an operation leaves its mathematical domain
/// (division by zero, pole argument, |q| >= 1 infinite product, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One scalar value in one of three arithmetic modes:
///   ExactRational   -- mpq, no rounding
///   ExactGaussian   -- rational real and imaginary parts, no rounding
///   FloatComplex    -- std::complex<double>
/// Mixed-mode arithmetic promotes exact -> float; rational x gaussian
/// stays gaussian. A gaussian result whose imaginary part cancels to
/// zero is demoted back to ExactRational, so the mode tag is canonical.
class Scalar {
 public:
  enum class Mode { ExactRational, ExactGaussian, FloatComplex };

  Scalar() : mode_(Mode::ExactRational), re_(0), im_(0) {}
  Scalar(int n) : mode_(Mode::ExactRational), re_(n), im_(0) {}
  Scalar(long n) : mode_(Mode::ExactRational), re_(static_cast<signed long>(n)), im_(0) {}
  Scalar(const mpq_class& q) : mode_(Mode::ExactRational), re_(q), im_(0) {}

  static Scalar rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  static Scalar gaussian(const mpq_class& re, const mpq_class& im) {
    Scalar s;
    s.re_ = re;
    s.im_ = im;
    s.mode_ = (im == 0) ? Mode::ExactRational : Mode::ExactGaussian;
    return s;
  }
  static Scalar floating(double x) { return floating(std::complex<double>(x, 0.0)); }
  static Scalar floating(std::complex<double> z) {
    Scalar s;
    s.mode_ = Mode::FloatComplex;
    s.f_ = z;
    return s;
  }

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ != Mode::FloatComplex; }
  bool is_zero() const {
    return is_exact() ? (re_ == 0 && im_ == 0) : (f_ == std::complex<double>(0.0, 0.0));
  }
  bool is_real() const {
    return is_exact() ? im_ == 0 : f_.imag() == 0.0;
  }

  /// Exact rational payload; only valid in ExactRational mode.
  const mpq_class& rat() const {
    if (mode_ != Mode::ExactRational) throw DomainError("scalar is not a plain rational");
    return re_;
  }
  const mpq_class& exact_re() const { return re_; }
  const mpq_class& exact_im() const { return im_; }

  std::complex<double> to_complex() const {
    if (is_exact()) return {re_.get_d(), im_.get_d()};
    return f_;
  }
  double to_double() const {
    if (!is_real()) throw DomainError("scalar has nonzero imaginary part");
    return is_exact() ? re_.get_d() : f_.real();
  }

  Scalar real() const {
    return is_exact() ? Scalar(re_) : floating(f_.real());
  }
  Scalar imag() const {
    return is_exact() ? Scalar(im_) : floating(f_.imag());
  }
  Scalar conj() const {
    if (is_exact()) return gaussian(re_, -im_);
    return floating(std::conj(f_));
  }

  Scalar operator-() const {
    if (is_exact()) return gaussian(-re_, -im_);
    return floating(-f_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return gaussian(a.re_ + b.re_, a.im_ + b.im_);
    return floating(a.to_complex() + b.to_complex());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    return floating(a.to_complex() * b.to_complex());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DomainError("division by zero scalar");
    if (a.is_exact() && b.is_exact()) {
      mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
      return gaussian((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    return floating(a.to_complex() / b.to_complex());
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.re_ == b.re_ && a.im_ == b.im_;
    return a.to_complex() == b.to_complex();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Ordering is defined for real values only.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (!a.is_real() || !b.is_real()) throw DomainError("ordering needs real scalars");
    if (a.is_exact() && b.is_exact()) return a.re_ < b.re_;
    return a.to_double() < b.to_double();
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  Scalar pow(long e) const {
    if (e < 0) return Scalar(1) / pow(-e);
    Scalar r(1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  /// Float magnitude; exact |.| only when the value is rational.
  double abs() const { return std::abs(to_complex()); }

  /// True when ExactRational, >= 0, and numerator/denominator are both
  /// perfect squares; *out gets the exact square root.
  bool exact_sqrt(Scalar* out) const {
    if (mode_ != Mode::ExactRational || re_ < 0) return false;
    mpz_class num = re_.get_num(), den = re_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (out) *out = Scalar(mpq_class(rn) / mpq_class(rd));
    return true;
  }

  /// Square root: exact when possible, float otherwise.
  Scalar sqrt() const {
    Scalar r;
    if (exact_sqrt(&r)) return r;
    return floating(std::sqrt(to_complex()));
  }

  std::string str() const {
    if (mode_ == Mode::ExactRational) return re_.get_str();
    if (mode_ == Mode::ExactGaussian) return re_.get_str() + (im_ >= 0 ? "+" : "") + im_.get_str() + "i";
    char buf[64];
    if (f_.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", f_.real());
      return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", f_.real(), f_.imag());
    return buf;
  }

  /// Convert this value to the float backend.
  Scalar to_float() const { return floating(to_complex()); }

 private:
  Mode mode_;
  mpq_class re_, im_;
  std::complex<double> f_{};
};

/// Parse "3", "-3/2" or "1.25" into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace sdqm
