#pragma once

#include <initializer_list>
#include <vector>

#include "sdqm/scalar.hpp"

namespace sdqm {

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector (degree -1);
/// otherwise the trailing coefficient is nonzero.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Scalar> coeffs, char var = 'y') : c_(std::move(coeffs)), var_(var) {
    normalize();
  }
  Poly1(std::initializer_list<Scalar> coeffs, char var = 'y') : c_(coeffs), var_(var) {
    normalize();
  }
  static Poly1 constant(const Scalar& v, char var = 'y') { return Poly1({v}, var); }
  static Poly1 monomial(int deg, const Scalar& lead = Scalar(1), char var = 'y') {
    std::vector<Scalar> c(deg + 1, Scalar(0));
    c[deg] = lead;
    return Poly1(std::move(c), var);
  }

  char var() const { return var_; }
  void set_var(char v) { var_ = v; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  /// Coefficient of degree k (zero beyond the stored range).
  Scalar coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[k];
  }

  Scalar eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly1 derivative() const {
    if (c_.size() <= 1) return Poly1({}, var_);
    std::vector<Scalar> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
    return Poly1(std::move(d), var_);
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly1(std::move(c), a.var_);
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (b * Scalar(-1)); }
  friend Poly1 operator*(const Poly1& a, const Scalar& s) {
    std::vector<Scalar> c = a.c_;
    for (auto& v : c) v *= s;
    return Poly1(std::move(c), a.var_);
  }
  friend Poly1 operator*(const Scalar& s, const Poly1& a) { return a * s; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1({}, a.var_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(c), a.var_);
  }
  friend bool operator==(const Poly1& a, const Poly1& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t k = 0; k < a.c_.size(); ++k)
      if (a.c_[k] != b.c_[k]) return false;
    return true;
  }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  /// Shift every degree up by one (multiplication by the variable).
  Poly1 shift_up() const {
    if (is_zero()) return *this;
    std::vector<Scalar> c(c_.size() + 1, Scalar(0));
    for (size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k];
    return Poly1(std::move(c), var_);
  }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_abs() const {
    double m = 0;
    for (const auto& v : c_) m = std::max(m, v.abs());
    return m;
  }

  std::string str() const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
  char var_ = 'y';
};

}  // namespace sdqm
