#pragma once

#include <utility>
#include <vector>

#include "sdqm/poly.hpp"

namespace sdqm {

class InterpolationError : public std::runtime_error {
 public:
  explicit InterpolationError(const std::string& what, double max_residual = 0)
      : std::runtime_error(what), max_residual(max_residual) {}
  double max_residual;
};

/// Unique polynomial of degree <= degree_bound through the points
/// (Newton divided differences). Needs degree_bound+1 points with
/// pairwise-distinct abscissae; extra points are consistency-checked
/// (exactly in exact mode, against `tol` in float mode) and an
/// InterpolationError carrying the max residual is thrown when they
/// disagree. Duplicate abscissae throw as well: exact equality in
/// exact mode, spacing below 1e-12 in float mode.
Poly1 interpolate_poly(const std::vector<std::pair<Scalar, Scalar>>& points, int degree_bound,
                       double tol = 1e-9, char var = 'y');

}  // namespace sdqm
